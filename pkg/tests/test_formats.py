"""
Tests for the JSON interchange formats
"""

import json
from fractions import Fraction

import numpy as np
import pytest

from graphoid_lab.distributions.gaussian import GaussianModel
from graphoid_lab.distributions.oracles import oracle_for
from graphoid_lab.distributions.tabular import TabularDistribution
from graphoid_lab.formats.loader import (
    detect_kind,
    dump_json,
    gaussian_to_dict,
    load_distribution,
    load_model,
    load_network,
    load_similarity_graph,
    load_source,
    model_to_dict,
    parse_network,
    parse_tabular,
    read_json,
    save_network,
)
from graphoid_lab.graphoid.model import DependencyModel, close, is_closed
from graphoid_lab.network.belief import build
from graphoid_lab.utils.exceptions import ModelLoadError


def _binary_cells(names, probabilities):
    """Cells over binary variables, probabilities in lexicographic order"""
    cells = []
    for index, p in enumerate(probabilities):
        bits = format(index, f"0{len(names)}b")
        cells.append({'assign': dict(zip(names, bits)), 'p': p})
    return cells


def test_load_model(m1_model_json, m1_seed):
    m = load_model(m1_model_json)
    assert m == m1_seed
    assert not m.closed
    assert model_to_dict(m)['statements'] == [{'X': ['a', 'b'], 'Y': ['c', 'd'], 'Z': []}]


def test_load_model_ignores_false_closed_flag(write_json):
    path = write_json('flagged.json', {
        'variables': ['a', 'b', 'c', 'd'],
        'statements': [{'X': ['a', 'b'], 'Y': ['c', 'd'], 'Z': []}],
        'closed': True,
    })
    m = load_model(path)
    assert not m.closed
    closed = close(m)
    assert is_closed(closed).closed
    assert len(closed) > len(m)


def test_load_model_keeps_true_closed_flag(write_json, m1_closed):
    path = write_json('closed.json', model_to_dict(m1_closed))
    m = load_model(path)
    assert m.closed
    assert m == m1_closed


def test_load_model_rejects_unknown_variables(write_json):
    path = write_json('bad.json', {
        'variables': ['a', 'b'],
        'statements': [{'X': ['a'], 'Y': ['z']}],
    })
    with pytest.raises(ModelLoadError):
        load_model(path)


def test_load_model_rejects_schema_violations(write_json):
    path = write_json('bad.json', {'variables': ['a', 'b'], 'statements': [{'X': ['a']}]})
    with pytest.raises(ModelLoadError) as excinfo:
        load_model(path)
    assert 'schema validation error' in str(excinfo.value)


def test_read_json_errors(tmp_path):
    missing = tmp_path / 'missing.json'
    with pytest.raises(ModelLoadError):
        read_json(missing)

    broken = tmp_path / 'broken.json'
    broken.write_text('{"variables": [', encoding='utf-8')
    with pytest.raises(ModelLoadError):
        read_json(broken)

    array = tmp_path / 'array.json'
    array.write_text('[1, 2]', encoding='utf-8')
    with pytest.raises(ModelLoadError):
        read_json(array)


def test_load_tabular(parity_json, parity_dist):
    p = load_distribution(parity_json)
    assert isinstance(p, TabularDistribution)
    assert p == parity_dist


def test_parse_tabular_accepts_integer_and_rational_cells():
    data = {
        'type': 'tabular',
        'variables': [{'name': 'a'}],
        'cells': [{'assign': {'a': '0'}, 'p': 1}, {'assign': {'a': '1'}, 'p': '0/3'}],
    }
    p = parse_tabular(data)
    assert p.probability({0: '0'}) == Fraction(1)
    assert not p.is_strictly_positive


def test_parse_tabular_rejects_duplicate_cells():
    cells = _binary_cells(['a'], ['1/2', '1/2'])
    cells.append({'assign': {'a': '0'}, 'p': '0'})
    with pytest.raises(ModelLoadError, match='more than once'):
        parse_tabular({'type': 'tabular', 'variables': [{'name': 'a'}], 'cells': cells})


def test_parse_tabular_rejects_missing_cells():
    cells = _binary_cells(['a', 'b'], ['1/2', '1/2'])
    with pytest.raises(ModelLoadError, match='cover 2 of 4'):
        parse_tabular({'type': 'tabular', 'variables': [{'name': 'a'}, {'name': 'b'}], 'cells': cells})


def test_parse_tabular_rejects_unknown_assignments():
    cells = [{'assign': {'a': '0', 'q': '1'}, 'p': '1/2'}, {'assign': {'a': '1'}, 'p': '1/2'}]
    with pytest.raises(ModelLoadError, match='unknown'):
        parse_tabular({'type': 'tabular', 'variables': [{'name': 'a'}], 'cells': cells})


def test_parse_tabular_rejects_bad_mass():
    cells = _binary_cells(['a'], ['1/2', '1/3'])
    with pytest.raises(ModelLoadError):
        parse_tabular({'type': 'tabular', 'variables': [{'name': 'a'}], 'cells': cells})
    with pytest.raises(ModelLoadError):
        parse_tabular({'type': 'tabular', 'variables': [{'name': 'a'}],
                       'cells': _binary_cells(['a'], ['3/2', '-1/2'])})
    with pytest.raises(ModelLoadError):
        parse_tabular({'type': 'tabular', 'variables': [{'name': 'a'}],
                       'cells': _binary_cells(['a'], ['1/0', '1'])})


def test_load_gaussian(write_json, chain_gaussian):
    path = write_json('chain.json', gaussian_to_dict(chain_gaussian))
    g = load_distribution(path)
    assert isinstance(g, GaussianModel)
    np.testing.assert_allclose(g.covariance, chain_gaussian.covariance)
    assert g.universe.names == ('x1', 'x2', 'x3')


def test_load_gaussian_rejects_irregular_covariance(write_json):
    path = write_json('singular.json', {
        'type': 'gaussian', 'variables': ['x1', 'x2'],
        'mean': [0.0, 0.0], 'covariance': [[1.0, 1.0], [1.0, 1.0]],
    })
    with pytest.raises(ModelLoadError):
        load_distribution(path)


def test_load_distribution_needs_a_type(m1_model_json):
    with pytest.raises(ModelLoadError):
        load_distribution(m1_model_json)


def test_detect_kind():
    assert detect_kind({'type': 'tabular'}) == 'tabular'
    assert detect_kind({'variables': [], 'statements': []}) == 'model'
    assert detect_kind({'hypothesis': 'h'}) == 'similarity'
    assert detect_kind({'parents': {}}) == 'network'
    with pytest.raises(ModelLoadError):
        detect_kind({'variables': ['a']})


def test_load_source(m1_model_json, parity_json, write_json):
    assert isinstance(load_source(m1_model_json), DependencyModel)
    assert isinstance(load_source(parity_json), TabularDistribution)
    network = write_json('net.json', {'variables': ['a'], 'parents': {}})
    with pytest.raises(ModelLoadError):
        load_source(network)


def test_network_save_and_load(tmp_path, parity_dist):
    net = build(oracle_for(parity_dist), 'b,a,c')
    path = tmp_path / 'net.json'
    save_network(net, path)
    assert load_network(path) == net
    assert json.loads(path.read_text())['parents']['c'] == ['a', 'b']


def test_parse_network_without_ordering():
    net = parse_network({'variables': ['a', 'b', 'c'], 'parents': {'a': ['c']}})
    assert net.named_edges() == [('c', 'a')]
    assert net.ordering == (1, 2, 0)


def test_parse_network_errors():
    with pytest.raises(ModelLoadError, match='precede'):
        parse_network({'variables': ['a', 'b'], 'ordering': ['a', 'b'], 'parents': {'a': ['b']}})
    with pytest.raises(ModelLoadError):
        parse_network({'variables': ['a', 'b'], 'parents': {'a': ['b'], 'b': ['a']}})
    with pytest.raises(ModelLoadError):
        parse_network({'variables': ['a', 'b'], 'ordering': ['a'], 'parents': {}})


def test_load_similarity_graph(write_json):
    path = write_json('sim.json', {
        'hypothesis': 'h', 'values': ['h1', 'h2', 'h3'], 'edges': [['h2', 'h1'], ['h3', 'h2']],
    })
    graph = load_similarity_graph(path)
    assert graph.edges == (('h1', 'h2'), ('h2', 'h3'))

    broken = write_json('broken.json', {'hypothesis': 'h', 'values': ['h1', 'h2'], 'edges': []})
    with pytest.raises(ModelLoadError):
        load_similarity_graph(broken)


def test_dump_json_is_sorted_and_stable(tmp_path):
    path = tmp_path / 'out.json'
    text = dump_json({'b': 1, 'a': [1, 2]}, path)
    assert text.index('"a"') < text.index('"b"')
    assert path.read_text(encoding='utf-8') == text + '\n'
