"""
Tests for instantiated models, propositional transitivity and unification
"""

import pytest

from graphoid_lab.distributions.generators import generate
from graphoid_lab.distributions.oracles import induced_model, oracle_for
from graphoid_lab.graphoid.triplet import Triplet
from graphoid_lab.graphoid.universe import Universe, bit
from graphoid_lab.instantiated.axioms import (
    cell_splits,
    check_propositional_transitivity,
    check_propositional_transitivity_all,
    check_unification,
)
from graphoid_lab.instantiated.model import (
    InstantiatedModel,
    InstantiatedTriplet,
    check_conditional_coherence,
    conditional_model,
    induced_uninstantiated,
)
from graphoid_lab.utils.exceptions import CapacityError, DomainError, InputError, ZeroEvidenceError

A, B, C, D = bit(0), bit(1), bit(2), bit(3)


def test_pair_copy_is_independent_at_each_value_of_c(pair_copy_dist):
    m = InstantiatedModel(pair_copy_dist)
    t = InstantiatedTriplet.from_names(m.universe, {'a': '0'}, {'b': '1'}, {'c': '01'})
    assert m.query(t)
    assert t.render(m.universe) == 'I(a=0; b=1 | c=01)'


def test_parity_is_dependent_at_values(parity_dist):
    m = InstantiatedModel(parity_dist)
    assert not m.query(InstantiatedTriplet.from_names(m.universe, {'a': '0'}, {'b': '0'}, {'c': '0'}))
    assert m.query(InstantiatedTriplet.from_names(m.universe, {'a': '0'}, {'b': '0'}))


def test_query_with_impossible_evidence_raises(pair_copy_dist):
    m = InstantiatedModel(pair_copy_dist)
    t = InstantiatedTriplet.from_names(m.universe, {'a': '0'}, {}, {'c': '11', 'b': '0'})
    with pytest.raises(ZeroEvidenceError):
        m.query(t)


def test_query_needs_a_value_for_every_member(parity_dist):
    m = InstantiatedModel(parity_dist)
    with pytest.raises(InputError):
        m.query(InstantiatedTriplet(A, B, C, {0: '0', 1: '0'}))


def test_gaussian_values_do_not_matter(chain_gaussian):
    m = InstantiatedModel(chain_gaussian)
    for value in (-4.0, 0.0, 12.5):
        t = InstantiatedTriplet.from_names(m.universe, {'x1': 1.0}, {'x3': -2.0}, {'x2': value})
        assert m.query(t)
    assert not m.query(InstantiatedTriplet.from_names(m.universe, {'x1': 1.0}, {'x3': 0.0}))
    with pytest.raises(DomainError):
        m.query(InstantiatedTriplet.from_names(m.universe, {'x1': float('nan')}, {'x3': 0.0}))
    with pytest.raises(DomainError):
        m.values_of(0)


def test_instantiated_model_rejects_other_backings(m1_closed):
    with pytest.raises(TypeError):
        InstantiatedModel(m1_closed)


def test_conditional_parity_model(parity_dist):
    conditional = conditional_model(InstantiatedModel(parity_dist), 2, '0')
    assert conditional.universe.names == ('a', 'b')
    assert not conditional.independent(A, B, 0)


def test_conditional_gaussian_model(chain_gaussian):
    conditional = conditional_model(InstantiatedModel(chain_gaussian), 1, 2.0)
    assert conditional.is_gaussian
    assert conditional.independent(A, B, 0)


def test_conditional_model_errors(parity_dist):
    m = InstantiatedModel(parity_dist)
    with pytest.raises(InputError):
        conditional_model(m, 5, '0')
    single = conditional_model(conditional_model(m, 2, '0'), 1, '0')
    with pytest.raises(InputError):
        conditional_model(single, 0, '0')


@pytest.mark.parametrize('fixture', ['parity_dist', 'pair_copy_dist'])
def test_conditional_model_is_coherent(fixture, request):
    p = request.getfixturevalue(fixture)
    m = InstantiatedModel(p)
    for value in p.domain(2):
        check = check_conditional_coherence(m, 2, value)
        assert check
        assert check.checked > 0


def test_coherence_on_random_distribution():
    p = generate('spb-random', 3, 4)
    m = InstantiatedModel(p)
    for u in range(3):
        assert check_conditional_coherence(m, u, '1')


def test_induced_uninstantiated_matches_set_level(parity_dist, pair_copy_dist):
    for p in (parity_dist, pair_copy_dist):
        induced = induced_uninstantiated(InstantiatedModel(p))
        assert induced.statements == induced_model(oracle_for(p)).statements

    pair_copy_model = induced_uninstantiated(InstantiatedModel(pair_copy_dist))
    assert Triplet(A, B, 0) in pair_copy_model
    assert Triplet(A, B, C) in pair_copy_model


def test_induced_uninstantiated_gaussian(chain_gaussian):
    induced = induced_uninstantiated(InstantiatedModel(chain_gaussian))
    assert Triplet(A, C, B) in induced
    assert Triplet(A, C, 0) not in induced


def test_induced_uninstantiated_cap():
    with pytest.raises(CapacityError):
        induced_uninstantiated(InstantiatedModel(generate('spb-random', 7, 0)))


def test_cell_splits_reconstruct():
    u = Universe(['a', 'b', 'c', 'd'])
    splits = list(cell_splits(u, 0, 1))
    # two choices of e, eight cells for the one remaining variable
    assert len(splits) == 16
    assert all(split.reconstructs() for split in splits)
    assert all(split.a & A and split.b & B for split in splits)
    assert len(list(cell_splits(u, 0, 1, partial=True))) == 18


@pytest.mark.parametrize('seed', [0, 1, 2])
def test_propositional_transitivity_holds_for_strictly_positive_binary(seed):
    report = check_propositional_transitivity_all(InstantiatedModel(generate('spb-random', 4, seed)))
    assert report.passed
    assert report.violation is None
    assert report.checked_instances > 0


def test_propositional_transitivity_is_exercised_on_block_products():
    p = generate('spb-block-product', 4, 6, {'blocks': 'a,b|c,d'})
    report = check_propositional_transitivity(InstantiatedModel(p), 0, 2)
    assert report.passed
    assert report.antecedent_hits > 0
    assert report.to_dict()['pass']


def test_propositional_transitivity_holds_for_gaussians():
    g = generate('gaussian-block', 4, 3, {'blocks': 'x1,x2|x3,x4'})
    report = check_propositional_transitivity_all(InstantiatedModel(g))
    assert report.passed
    assert report.antecedent_hits > 0


def test_propositional_transitivity_input_errors(parity_dist):
    m = InstantiatedModel(parity_dist)
    with pytest.raises(InputError):
        check_propositional_transitivity(m, 0, 0)
    with pytest.raises(CapacityError):
        check_propositional_transitivity(m, 0, 1, max_variables=2)


def test_two_variable_scan_is_vacuous():
    p = generate('spb-random', 2, 1)
    report = check_propositional_transitivity(InstantiatedModel(p), 0, 1)
    assert report.passed
    assert report.checked_instances == 0


def test_unification_on_markov_chain(chain_gaussian):
    report = check_unification(chain_gaussian, grid=(-1.0, 0.0, 5.0))
    assert report.passed
    assert report.checked == 9
    assert report.max_deviation <= 1e-9
    assert report.to_dict()['violation'] is None


def test_unification_on_random_gaussians():
    for seed in range(3):
        report = check_unification(generate('gaussian-random', 4, seed), max_conditioning=2)
        assert report.passed


def test_unification_grid_needs_three_values(chain_gaussian):
    with pytest.raises(InputError):
        check_unification(chain_gaussian, grid=(0.0, 1.0, 1.0))
