"""
Tests for the experiment suites and runner
"""

import pytest

from graphoid_lab.config.manager import ConfigManager
from graphoid_lab.analysis.unrelatedness import is_separable, is_transitive
from graphoid_lab.experiments.fixtures import (
    INDUCED_KINDS,
    disjoint_set_triples,
    induced_fixture,
    orderings,
    random_closed_model,
    trial_seed,
)
from graphoid_lab.experiments.models import ExperimentConfig
from graphoid_lab.experiments.runner import ExperimentRunner, run_experiment
from graphoid_lab.experiments.suites import SUITES, get_suite
from graphoid_lab.graphoid.model import is_closed
from graphoid_lab.utils.exceptions import InputError


@pytest.fixture
def sequential(tmp_path):
    return ConfigManager(project_root=tmp_path, overrides={'experiments.parallel': False})


@pytest.fixture
def runner(sequential):
    return ExperimentRunner(sequential)


@pytest.mark.parametrize('suite, n, trials', [
    ('thm1', 4, 4),
    ('thm3', 4, 2),
    ('thm4', 4, 2),
    ('thm5-spb', 4, 2),
    ('thm5-gauss', 4, 2),
    ('thm6', 4, 2),
    ('thm7', 4, 2),
    ('lemma2', 4, 3),
    ('lemma8', 4, 2),
    ('unification', 3, 2),
    ('simnet', 1, 2),
])
def test_suite_passes(runner, suite, n, trials):
    report = runner.run(ExperimentConfig(suite=suite, n=n, trials=trials, seed=1))
    assert report.passed, report.first_counterexample
    assert report.failed_trials == []
    assert len(report.trials) == trials
    assert report.total_checks > 0
    assert [t.index for t in report.trials] == list(range(trials))


def test_counterexamples_suite_runs_two_fixed_trials(runner):
    report = runner.run(ExperimentConfig(suite='counterexamples', n=1, trials=20))
    assert report.passed
    assert [t.fixture for t in report.trials] == ['pair-copy', 'parity']
    assert report.config.trials == 2
    assert report.trials[0].details['transitivity_counterexample'] == ['a', 'c', 'b']


def test_thm5_reports_antecedent_hits(runner):
    report = runner.run(ExperimentConfig(suite='thm5-spb', n=4, trials=2, seed=3))
    assert report.antecedent_hits == sum(t.antecedent_hits for t in report.trials)
    assert report.trials[1].fixture == 'spb-block-product'
    assert report.trials[1].antecedent_hits > 0
    assert report.antecedent_hits > 0


def test_thm1_alternates_closed_and_induced_models(runner):
    report = runner.run(ExperimentConfig(suite='thm1', n=4, trials=6, seed=2))
    assert report.passed, report.first_counterexample
    assert [t.fixture for t in report.trials] == [
        'closed-model', 'induced-spb-random',
        'closed-model', 'induced-spb-block-product',
        'closed-model', 'induced-gaussian-block',
    ]


def test_thm1_falls_back_to_closed_models_above_the_induced_cap(runner):
    cfg = ExperimentConfig(suite='thm1', n=4, trials=2, caps={'induced_max_variables': 3})
    report = runner.run(cfg)
    assert [t.fixture for t in report.trials] == ['closed-model', 'closed-model']


@pytest.mark.parametrize('index', range(len(INDUCED_KINDS)))
@pytest.mark.parametrize('seed', [0, 1, 2])
def test_separability_matches_transitivity_on_induced_models(index, seed):
    kind, m = induced_fixture(4, seed, index)
    assert kind == f"induced-{INDUCED_KINDS[index]}"
    assert is_separable(m).separable == is_transitive(m).transitive


def test_reports_are_deterministic(runner):
    cfg = ExperimentConfig(suite='thm3', n=4, trials=3, seed=7)
    first = runner.run(cfg).to_dict(include_timing=False)
    second = runner.run(cfg).to_dict(include_timing=False)
    assert first == second
    assert 'wall_time' not in first


def test_parallel_and_sequential_runs_agree(tmp_path, runner):
    parallel = ExperimentRunner(ConfigManager(project_root=tmp_path,
                                              overrides={'experiments.max_workers': 2}))
    cfg = ExperimentConfig(suite='lemma8', n=4, trials=4, seed=2)
    assert parallel.parallel
    assert (parallel.run(cfg).to_dict(include_timing=False)
            == runner.run(cfg).to_dict(include_timing=False))


def test_report_echoes_effective_settings(runner):
    cfg = ExperimentConfig(suite='thm7', n=3, trials=1, caps={'trail_cap': 5000})
    data = runner.run(cfg).to_dict()
    assert data['config']['caps']['trail_cap'] == 5000
    assert data['config']['caps']['closure_max_variables'] == 10
    assert data['config']['tolerance'] == pytest.approx(1e-9)
    assert data['config']['orderings'] == 50
    assert data['config']['generators'] == {
        'scheme': 'pcg64-v1', 'max_weight': 16, 'gaussian_epsilon': 0.1, 'sparse_zero_fraction': 0.25,
    }
    assert data['config']['caps']['induced_max_variables'] == 6
    assert 'wall_time' in data


def test_suite_default_tolerance_applies(runner):
    report = runner.run(ExperimentConfig(suite='thm5-gauss', n=3, trials=1))
    assert report.config.tolerance == pytest.approx(1e-7)
    explicit = runner.run(ExperimentConfig(suite='thm5-gauss', n=3, trials=1, tolerance=1e-8))
    assert explicit.config.tolerance == pytest.approx(1e-8)


def test_runner_rejects_bad_configs(runner):
    with pytest.raises(InputError):
        runner.run(ExperimentConfig(suite='thm1', trials=0))
    with pytest.raises(InputError):
        runner.run(ExperimentConfig(suite='thm5-spb', n=2, trials=1))
    with pytest.raises(InputError):
        runner.run(ExperimentConfig(suite='thm1', n=3, trials=1, caps={'bogus': 3}))
    with pytest.raises(InputError):
        runner.run(ExperimentConfig(suite='nope'))


def test_exploratory_suite_needs_flag(runner):
    with pytest.raises(InputError):
        get_suite('conjecture-binary')
    report = runner.run(ExperimentConfig(suite='conjecture-binary', n=3, trials=1, exploratory=True))
    assert report.exploratory
    assert report.to_dict()['exploratory']


def test_suite_registry():
    assert {'thm1', 'thm3', 'thm4', 'thm5-spb', 'thm5-gauss', 'thm6', 'thm7',
            'lemma2', 'lemma8', 'counterexamples'} <= set(SUITES)
    assert get_suite('counterexamples').fixed_trials == 2


def test_run_experiment_uses_given_config(sequential):
    report = run_experiment(ExperimentConfig(suite='counterexamples', n=1, trials=1), sequential)
    assert report.passed


def test_trial_seeds():
    assert trial_seed(0, 5) == 5
    assert trial_seed(2, 1) == 2_000_007
    assert len({trial_seed(1, i) for i in range(100)}) == 100


def test_orderings():
    assert len(orderings(4, 0, 5, 50)) == 24
    sampled = orderings(6, 3, 5, 10)
    assert len(sampled) == 10
    assert sampled[0] == tuple(range(6))
    assert sampled == orderings(6, 3, 5, 10)


def test_random_closed_model_is_closed():
    for seed in range(3):
        m = random_closed_model(4, seed)
        assert m.closed
        assert is_closed(m)
    with pytest.raises(InputError):
        random_closed_model(1, 0)


def test_disjoint_set_triples():
    triples = list(disjoint_set_triples(0b111))
    assert all(not (a & b or a & c or b & c) for a, b, c in triples)
    assert all(b < c for _, b, c in triples)
    assert len(triples) == 3
    assert len(list(disjoint_set_triples(0b1111, limit=5))) == 5


def test_generator_settings_reach_the_fixtures(tmp_path):
    config = ConfigManager(project_root=tmp_path, overrides={
        'experiments.parallel': False,
        'generators.max_weight': 1,
    })
    report = ExperimentRunner(config).run(ExperimentConfig(suite='lemma8', n=3, trials=1))
    assert report.config.generators['max_weight'] == 1
    # Unit weights make every block uniform, so all variables are independent
    assert len(report.trials[0].details['components']) == 3


@pytest.mark.slow
def test_thm3_enumerates_every_ordering_at_five_variables(runner):
    report = runner.run(ExperimentConfig(suite='thm3', n=5, trials=20, seed=1))
    assert report.passed, report.first_counterexample
    assert all(t.details['orderings'] == 120 for t in report.trials)
    assert report.total_checks == 20 * 120


@pytest.mark.slow
@pytest.mark.parametrize('suite', ['thm5-spb', 'thm5-gauss'])
def test_thm5_holds_over_twenty_five_fixtures(runner, suite):
    report = runner.run(ExperimentConfig(suite=suite, n=5, trials=25, seed=1))
    assert report.passed, report.first_counterexample
    assert len(report.trials) == 25
    assert report.antecedent_hits > 0
