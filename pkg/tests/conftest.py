"""
Shared fixtures for the Graphoid Lab test suite
"""

import json

import pytest

from graphoid_lab.config.manager import ConfigManager
from graphoid_lab.distributions.generators import m1_product, markov_chain, pair_copy, parity
from graphoid_lab.formats.loader import tabular_to_dict
from graphoid_lab.graphoid.model import DependencyModel, close
from graphoid_lab.graphoid.triplet import Triplet
from graphoid_lab.graphoid.universe import Universe


@pytest.fixture
def abcd():
    return Universe(['a', 'b', 'c', 'd'])


@pytest.fixture
def m1_seed(abcd):
    """{I({a,b}, {c,d}; ∅)}"""
    return DependencyModel.from_statements(
        abcd, [Triplet(abcd.varset('ab'), abcd.varset('cd'), 0)]
    )


@pytest.fixture
def m1_closed(m1_seed):
    return close(m1_seed)


@pytest.fixture
def parity_dist():
    return parity()


@pytest.fixture
def pair_copy_dist():
    return pair_copy()


@pytest.fixture
def m1_dist():
    return m1_product(seed=3)


@pytest.fixture
def chain_gaussian():
    return markov_chain()


@pytest.fixture
def write_json(tmp_path):
    """Write a JSON document under tmp_path and return its path as a string"""

    def write(name, data):
        path = tmp_path / name
        path.write_text(json.dumps(data), encoding='utf-8')
        return str(path)

    return write


@pytest.fixture
def m1_model_json(write_json):
    return write_json('m1.json', {
        'variables': ['a', 'b', 'c', 'd'],
        'statements': [{'X': ['a', 'b'], 'Y': ['c', 'd'], 'Z': []}],
    })


@pytest.fixture
def parity_json(write_json, parity_dist):
    return write_json('parity.json', tabular_to_dict(parity_dist))


@pytest.fixture
def pair_copy_json(write_json, pair_copy_dist):
    return write_json('pair_copy.json', tabular_to_dict(pair_copy_dist))


@pytest.fixture
def config(tmp_path):
    """Defaults only: no project file in an empty working directory"""
    return ConfigManager(project_root=tmp_path)
