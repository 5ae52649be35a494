"""
Tests for the command-line interface and its exit codes
"""

import json
import logging

import pytest
from click.testing import CliRunner

from graphoid_lab import __version__
from graphoid_lab.cli import main
from graphoid_lab.distributions.generators import generate, similarity_fixture
from graphoid_lab.formats.loader import gaussian_to_dict, tabular_to_dict
from graphoid_lab.utils.logging import ROOT_LOGGER


@pytest.fixture
def cli(tmp_path, monkeypatch):
    """Invoke the CLI with JSON-only, quiet output from an empty directory"""
    monkeypatch.chdir(tmp_path)
    runner = CliRunner()

    def invoke(*args):
        return runner.invoke(main, ['--json', '--quiet', *args])

    return invoke


def test_version():
    result = CliRunner().invoke(main, ['--version'])
    assert result.exit_code == 0
    assert __version__ in result.output


def test_analyze_pair_on_m1(cli, m1_model_json):
    result = cli('analyze', 'pair', '--model', m1_model_json, '--a', 'a', '--b', 'c')
    assert result.exit_code == 0, result.output
    data = json.loads(result.output)
    assert data['totally_independent'] and data['totally_uncoupled'] and data['totally_disconnected']
    assert data['witness'] == [['a', 'b'], ['c', 'd']]


def test_analyze_pair_on_pair_copy(cli, pair_copy_json):
    result = cli('analyze', 'pair', '--dist', pair_copy_json, '--a', 'a', '--b', 'b')
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data['totally_independent']
    assert not data['totally_uncoupled']


def test_analyze_pair_cap(cli, m1_model_json):
    result = cli('analyze', 'pair', '--model', m1_model_json, '--a', 'a', '--b', 'c', '--cap', '2')
    assert result.exit_code == 2
    result = cli('analyze', 'pair', '--model', m1_model_json, '--a', 'a', '--b', 'c', '--cap', '4')
    assert result.exit_code == 0


def test_analyze_checks_the_source_kind(cli, m1_model_json, parity_json):
    assert cli('analyze', 'separability', '--model', parity_json).exit_code == 2
    assert cli('analyze', 'transitivity', '--dist', m1_model_json).exit_code == 2


def test_analyze_pair_tolerance(cli, write_json, chain_gaussian):
    path = write_json('chain.json', gaussian_to_dict(chain_gaussian))
    strict = cli('analyze', 'pair', '--dist', path, '--a', 'x1', '--b', 'x3')
    assert json.loads(strict.output)['totally_independent'] is False
    loose = cli('analyze', 'pair', '--dist', path, '--a', 'x1', '--b', 'x3', '--tolerance', '0.3')
    assert json.loads(loose.output)['totally_independent'] is True


def test_separability_and_transitivity_violations(cli, pair_copy_json):
    result = cli('analyze', 'separability', '--dist', pair_copy_json)
    assert result.exit_code == 1
    assert json.loads(result.output)['counterexample'] == ['a', 'b']

    result = cli('analyze', 'transitivity', '--dist', pair_copy_json)
    assert result.exit_code == 1
    assert json.loads(result.output)['counterexample'] == ['a', 'c', 'b']


def test_analyze_model(cli, m1_model_json):
    result = cli('analyze', 'model', '--model', m1_model_json)
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert len(data['pairs']) == 6
    assert data['separable'] and data['transitive']


def test_dist_indep(cli, parity_json):
    result = cli('dist', 'indep', '--dist', parity_json, '--x', 'a', '--y', 'b', '--z', 'c')
    assert result.exit_code == 1
    assert json.loads(result.output)['independent'] is False

    result = cli('dist', 'indep', '--dist', parity_json, '--x', 'a', '--y', 'b')
    assert result.exit_code == 0
    assert json.loads(result.output) == {'X': ['a'], 'Y': ['b'], 'Z': [], 'independent': True}


def test_dist_indep_at_values(cli, pair_copy_json):
    result = cli('dist', 'indep', '--dist', pair_copy_json, '--x', 'a', '--y', 'b', '--z', 'c',
                 '--at', 'c=01')
    assert result.exit_code == 0
    assert json.loads(result.output)['at'] == {'c': '01'}


def test_dist_indep_single_instantiation(cli, parity_json):
    result = cli('dist', 'indep', '--dist', parity_json, '--x', 'a', '--y', 'b', '--at', 'a=0,b=1')
    assert result.exit_code == 0, result.output
    data = json.loads(result.output)
    assert data['at'] == {'a': '0', 'b': '1'}
    assert data['independent'] is True

    result = cli('dist', 'indep', '--dist', parity_json, '--x', 'a', '--y', 'b', '--z', 'c',
                 '--at', 'a=0,b=0,c=0')
    assert result.exit_code == 1
    assert json.loads(result.output)['independent'] is False


def test_dist_indep_rejects_partial_assignments(cli, parity_json):
    result = cli('dist', 'indep', '--dist', parity_json, '--x', 'a', '--y', 'b', '--z', 'c',
                 '--at', 'a=0')
    assert result.exit_code == 2


def test_dist_indep_tolerance(cli, write_json, chain_gaussian):
    path = write_json('chain.json', gaussian_to_dict(chain_gaussian))
    assert cli('dist', 'indep', '--dist', path, '--x', 'x1', '--y', 'x3').exit_code == 1
    loose = cli('dist', 'indep', '--dist', path, '--x', 'x1', '--y', 'x3', '--tolerance', '0.3')
    assert loose.exit_code == 0
    assert json.loads(loose.output)['independent'] is True


def test_dist_indep_rejects_bad_variable(cli, parity_json):
    result = cli('dist', 'indep', '--dist', parity_json, '--x', 'q', '--y', 'b')
    assert result.exit_code == 2


def test_dist_gen_named_example(cli, tmp_path):
    out = tmp_path / 'parity.json'
    result = cli('dist', 'gen', '--kind', 'named-example', '--name', 'parity', '--out', str(out))
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data['type'] == 'tabular'
    assert json.loads(out.read_text()) == data


def test_dist_gen_is_deterministic(cli):
    first = cli('dist', 'gen', '--kind', 'spb-random', '--n', '3', '--seed', '4')
    second = cli('dist', 'gen', '--kind', 'spb-random', '--n', '3', '--seed', '4')
    assert first.exit_code == 0
    assert first.output == second.output


def test_model_check_and_close(cli, m1_model_json, tmp_path):
    result = cli('model', 'check', '--model', m1_model_json)
    assert result.exit_code == 1
    assert json.loads(result.output)['closed'] is False

    closed_path = tmp_path / 'closed.json'
    result = cli('model', 'close', '--model', m1_model_json, '--out', str(closed_path))
    assert result.exit_code == 0
    assert json.loads(result.output)['closed'] is True

    result = cli('model', 'check', '--model', str(closed_path))
    assert result.exit_code == 0


def test_model_close_recloses_a_falsely_flagged_model(cli, write_json):
    path = write_json('flagged.json', {
        'variables': ['a', 'b', 'c', 'd'],
        'statements': [{'X': ['a', 'b'], 'Y': ['c', 'd'], 'Z': []}],
        'closed': True,
    })
    result = cli('model', 'close', '--model', path)
    assert result.exit_code == 0, result.output
    data = json.loads(result.output)
    assert data['closed'] is True
    assert len(data['statements']) > 1
    assert {'X': ['a'], 'Y': ['c'], 'Z': []} in data['statements']


def test_model_induce(cli, parity_json, tmp_path):
    out = tmp_path / 'induced.json'
    result = cli('model', 'induce', '--dist', parity_json, '--out', str(out))
    assert result.exit_code == 0, result.output
    data = json.loads(result.output)
    assert data['closed'] is True
    assert {'X': ['a'], 'Y': ['b'], 'Z': []} in data['statements']
    assert {'X': ['a'], 'Y': ['b'], 'Z': ['c']} not in data['statements']
    assert json.loads(out.read_text()) == data

    value_level = cli('model', 'induce', '--dist', parity_json, '--value-level')
    assert value_level.exit_code == 0
    assert json.loads(value_level.output)['statements'] == data['statements']


def test_model_induce_respects_the_configured_cap(cli, parity_json, tmp_path):
    config_path = tmp_path / 'small.yaml'
    config_path.write_text('limits:\n  induced_max_variables: 2\n', encoding='utf-8')
    result = cli('--config', str(config_path), 'model', 'induce', '--dist', parity_json)
    assert result.exit_code == 2


def test_bn_build_dot(cli, parity_json):
    result = cli('bn', 'build', '--dist', parity_json, '--order', 'a,b,c', '--dot')
    assert result.exit_code == 0
    assert 'a -> c' in result.output
    assert 'b -> c' in result.output


def test_bn_build_json_and_audit(cli, m1_model_json):
    result = cli('bn', 'build', '--model', m1_model_json, '--order', 'd,c,b,a', '--audit-parents')
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data['edges'] == [['b', 'a'], ['d', 'c']]
    assert data['parent_sets']['c'] == [['d']]


def test_bn_build_needs_exactly_one_source(cli, m1_model_json, parity_json):
    assert cli('bn', 'build').exit_code == 2
    assert cli('bn', 'build', '--model', m1_model_json, '--dist', parity_json).exit_code == 2


def test_bn_build_rejects_bad_ordering(cli, m1_model_json):
    result = cli('bn', 'build', '--model', m1_model_json, '--order', 'a,b,c')
    assert result.exit_code == 2


def test_bn_dsep_on_network_file(cli, write_json):
    path = write_json('collider.json', {
        'variables': ['a', 'b', 'c'], 'parents': {'c': ['a', 'b']},
    })
    result = cli('bn', 'dsep', '--network', path, '--x', 'a', '--y', 'b')
    assert result.exit_code == 0
    assert json.loads(result.output)['d_separated'] is True

    result = cli('bn', 'dsep', '--network', path, '--x', 'a', '--y', 'b', '--z', 'c', '--trails')
    assert result.exit_code == 1
    assert json.loads(result.output)['active_trails'] == ['a->c<-b']


def test_bn_components_and_dot(cli, m1_model_json):
    result = cli('bn', 'components', '--model', m1_model_json)
    assert result.exit_code == 0
    assert json.loads(result.output) == {'components': [['a', 'b'], ['c', 'd']]}

    result = cli('bn', 'dot', '--model', m1_model_json, '--name', 'm1')
    assert result.exit_code == 0
    assert result.output.startswith('digraph m1 {')


def test_axiom_proptrans(cli, write_json):
    path = write_json('spb.json', tabular_to_dict(generate('spb-block-product', 4, 6, {'blocks': 'a,b|c,d'})))
    result = cli('axiom', 'proptrans', '--dist', path, '--a', 'a', '--b', 'c')
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data['pass'] and data['antecedent_hits'] > 0

    assert cli('axiom', 'proptrans', '--dist', path, '--a', 'a').exit_code == 2


def test_axiom_unification(cli, write_json, chain_gaussian, parity_json):
    path = write_json('chain.json', gaussian_to_dict(chain_gaussian))
    result = cli('axiom', 'unification', '--dist', path, '--grid=-1,0,5')
    assert result.exit_code == 0
    assert json.loads(result.output)['checked'] == 9

    assert cli('axiom', 'unification', '--dist', path, '--grid', '0,1').exit_code == 2
    assert cli('axiom', 'unification', '--dist', parity_json).exit_code == 2


def test_simnet_validate_and_compose(cli, write_json):
    p = similarity_fixture(0)
    dist_path = write_json('sim.json', tabular_to_dict(p))
    values = list(p.domain(p.universe.index('h')))
    graph_path = write_json('graph.json', {
        'hypothesis': 'h', 'values': values, 'edges': [list(e) for e in zip(values, values[1:])],
    })

    result = cli('simnet', 'validate', '--dist', dist_path, '--graph', graph_path)
    assert result.exit_code == 0
    assert json.loads(result.output)['pass']

    result = cli('simnet', 'compose', '--dist', dist_path, '--graph', graph_path, '--dot')
    assert result.exit_code == 0
    assert result.output.startswith('digraph global {')
    assert 'doublecircle' in result.output


def test_experiment_run(cli):
    result = cli('experiment', 'run', '--suite', 'counterexamples', '--n', '3', '--trials', '2')
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data['suite'] == 'counterexamples'
    assert data['pass']
    assert 'wall_time' not in data

    timed = cli('experiment', 'run', '--suite', 'counterexamples', '--n', '3', '--timing')
    assert 'wall_time' in json.loads(timed.output)


def test_experiment_run_is_deterministic(cli):
    args = ('experiment', 'run', '--suite', 'thm3', '--n', '4', '--trials', '3', '--seed', '5')
    first = cli(*args)
    assert first.exit_code == 0
    assert cli(*args).output == first.output


def test_experiment_run_input_errors(cli):
    assert cli('experiment', 'run', '--suite', 'thm1', '--cap', 'bogus=3', '--trials', '1').exit_code == 2
    assert cli('experiment', 'run', '--suite', 'thm1', '--cap', 'trail_cap', '--trials', '1').exit_code == 2
    assert cli('experiment', 'run', '--suite', 'thm1', '--trials', '0').exit_code == 2
    assert cli('experiment', 'run', '--suite', 'conjecture-binary', '--trials', '1').exit_code == 2


def test_missing_config_file(cli, m1_model_json, tmp_path):
    result = cli('--config', str(tmp_path / 'absent.yaml'), 'model', 'check', '--model', m1_model_json)
    assert result.exit_code == 2


def test_unexpected_errors_exit_99(cli, m1_model_json, mocker):
    mocker.patch('graphoid_lab.cli.is_closed', side_effect=RuntimeError('boom'))
    result = cli('model', 'check', '--model', m1_model_json)
    assert result.exit_code == 99


@pytest.mark.parametrize('flags, expected', [
    (['--log-level', 'info'], logging.INFO),
    (['--log-level', 'DEBUG'], logging.DEBUG),
    (['--quiet', '--log-level', 'debug'], logging.ERROR),
    (['--verbose', '--log-level', 'error'], logging.DEBUG),
    ([], logging.WARNING),
])
def test_log_level_precedence(m1_model_json, flags, expected):
    result = CliRunner().invoke(main, ['--json', *flags, 'model', 'check', '--model', m1_model_json])
    assert result.exit_code == 1
    assert logging.getLogger(ROOT_LOGGER).level == expected
