"""
Tests for tabular and Gaussian distributions, oracles and generators
"""

from fractions import Fraction

import numpy as np
import pytest

from graphoid_lab.distributions.gaussian import (
    GaussianModel,
    gaussian_conditional,
    gaussian_independent,
)
from graphoid_lab.distributions.generators import KINDS, generate, named_example
from graphoid_lab.distributions.oracles import (
    CachedOracle,
    TabularOracle,
    canonical_triplets,
    induced_model,
    oracle_for,
)
from graphoid_lab.distributions.tabular import (
    TabularDistribution,
    Variable,
    condition_on,
    marginalize,
    restrict_domain,
    tabular_independent,
    tabular_independent_at,
)
from graphoid_lab.graphoid.model import close
from graphoid_lab.graphoid.triplet import Triplet
from graphoid_lab.graphoid.universe import bit
from graphoid_lab.utils.exceptions import (
    CapacityError,
    DomainError,
    InputError,
    InvalidTripletError,
    RegularityError,
    ZeroEvidenceError,
)

A, B, C = bit(0), bit(1), bit(2)
HALF = Fraction(1, 2)
QUARTER = Fraction(1, 4)


def test_tabular_distribution_must_sum_to_one():
    with pytest.raises(DomainError):
        TabularDistribution([Variable('a')], {('0',): Fraction(1, 3), ('1',): Fraction(1, 3)})


def test_tabular_distribution_rejects_out_of_domain_values():
    with pytest.raises(DomainError):
        TabularDistribution([Variable('a')], {('2',): Fraction(1)})


def test_marginalize_parity_onto_one_variable(parity_dist):
    marginal = marginalize(parity_dist, A)
    assert marginal.universe.names == ('a',)
    assert marginal.support() == {('0',): HALF, ('1',): HALF}


def test_marginalize_onto_everything_is_identity(parity_dist):
    assert marginalize(parity_dist, parity_dist.universe.full) is parity_dist


def test_marginalize_onto_nothing_is_trivial(parity_dist):
    trivial = marginalize(parity_dist, 0)
    assert trivial.universe.names == ()
    assert trivial.support() == {(): Fraction(1)}
    assert list(trivial.cells()) == [((), Fraction(1))]


def test_marginalize_pair_copy_onto_c(pair_copy_dist):
    marginal = marginalize(pair_copy_dist, C)
    assert marginal.support() == {(v,): QUARTER for v in ('00', '01', '10', '11')}


def test_condition_parity_on_c(parity_dist):
    conditioned = condition_on(parity_dist, parity_dist.assignment(c='0'))
    assert conditioned.universe.names == ('a', 'b')
    assert conditioned.support() == {('0', '0'): HALF, ('1', '1'): HALF}


def test_condition_on_empty_assignment_is_identity(parity_dist):
    assert condition_on(parity_dist, {}) is parity_dist


def test_condition_on_every_variable_is_trivial(parity_dist):
    trivial = condition_on(parity_dist, parity_dist.assignment(a='0', b='1', c='1'))
    assert trivial.universe.size == 0
    assert trivial.support() == {(): Fraction(1)}


def test_condition_pair_copy_is_point_mass(pair_copy_dist):
    conditioned = condition_on(pair_copy_dist, pair_copy_dist.assignment(c='01'))
    assert conditioned.support() == {('0', '1'): Fraction(1)}


def test_condition_on_zero_evidence_raises(parity_dist):
    with pytest.raises(ZeroEvidenceError):
        condition_on(parity_dist, parity_dist.assignment(a='0', b='0', c='1'))


def test_restrict_domain_keeps_variable(pair_copy_dist):
    restricted = restrict_domain(pair_copy_dist, 2, ('00', '11'))
    assert restricted.domain(2) == ('00', '11')
    assert restricted.probability({2: '00'}) == HALF


def test_parity_independence(parity_dist):
    assert tabular_independent(parity_dist, A, B, 0)
    assert tabular_independent(parity_dist, C, A, 0)
    assert tabular_independent(parity_dist, C, B, 0)
    assert not tabular_independent(parity_dist, C, A | B, 0)
    assert not tabular_independent(parity_dist, A, B, C)


def test_independence_is_symmetric(parity_dist, pair_copy_dist):
    for p in (parity_dist, pair_copy_dist):
        for t in canonical_triplets(p.universe.full):
            assert tabular_independent(p, t.x, t.y, t.z) == tabular_independent(p, t.y, t.x, t.z)


def test_overlapping_sets_are_invalid(parity_dist):
    with pytest.raises(InvalidTripletError):
        tabular_independent(parity_dist, A, A | B, 0)


def test_value_level_independence(pair_copy_dist, parity_dist):
    assert tabular_independent_at(pair_copy_dist, A, B, C, {2: '10'})
    assert tabular_independent_at(parity_dist, A, 0, 0, {})
    assert not tabular_independent_at(parity_dist, A, B, C, {2: '0'})


def test_value_level_requires_positive_evidence():
    point = TabularDistribution([Variable('x'), Variable('y')], {('0', '0'): Fraction(1)})
    with pytest.raises(ZeroEvidenceError):
        tabular_independent_at(point, bit(0), 0, bit(1), {1: '1'})


def test_set_level_is_conjunction_of_value_level():
    p = generate('spb-block-product', 3, 5, {'blocks': 'a,b|c'})
    for t in canonical_triplets(p.universe.full):
        expected = all(
            tabular_independent_at(p, t.x, t.y, t.z, z_values)
            for z_values in p.assignments(t.z)
            if p.probability(z_values) > 0
        )
        assert tabular_independent(p, t.x, t.y, t.z) == expected


def test_markov_chain_conditional_covariance(chain_gaussian):
    x1, x2, x3 = bit(0), bit(1), bit(2)
    conditional = gaussian_conditional(chain_gaussian, x2, [3.0])
    assert conditional.universe.names == ('x1', 'x3')
    assert conditional.covariance[0, 1] == pytest.approx(0.0, abs=1e-12)
    assert conditional.covariance[0, 0] == pytest.approx(0.75)


def test_gaussian_conditional_on_nothing_is_identity(chain_gaussian):
    assert gaussian_conditional(chain_gaussian, 0) is chain_gaussian


def test_identity_covariance_conditional():
    g = GaussianModel(['x1', 'x2', 'x3'], [0.0, 0.0, 0.0], np.eye(3))
    conditional = gaussian_conditional(g, bit(0), [7.0])
    np.testing.assert_allclose(conditional.covariance, np.eye(2))
    np.testing.assert_allclose(conditional.mean, [0.0, 0.0])


def test_gaussian_independence(chain_gaussian):
    x1, x2, x3 = bit(0), bit(1), bit(2)
    assert gaussian_independent(chain_gaussian, x1, x3, x2)
    assert not gaussian_independent(chain_gaussian, x1, x3, 0)
    assert gaussian_independent(chain_gaussian, x3, x1, x2)


def test_block_gaussian_blocks_are_independent():
    g = generate('gaussian-block', 4, 7, {'blocks': 'x1,x2|x3,x4'})
    assert gaussian_independent(g, bit(0) | bit(1), bit(2) | bit(3), 0)


def test_gaussian_rejects_irregular_covariance():
    with pytest.raises(RegularityError):
        GaussianModel(['x1', 'x2'], [0.0, 0.0], [[1.0, 2.0], [2.0, 1.0]])
    with pytest.raises(RegularityError):
        GaussianModel(['x1', 'x2'], [0.0, 0.0], [[1.0, 0.5], [0.4, 1.0]])
    with pytest.raises(RegularityError):
        GaussianModel(['x1'], [float('inf')], [[1.0]])


def test_parity_induced_model(parity_dist):
    m = induced_model(oracle_for(parity_dist))
    assert Triplet(A, B, 0) in m
    assert Triplet(A, C, 0) in m
    assert Triplet(B, C, 0) in m
    assert Triplet(C, A | B, 0) not in m
    assert m.closed


def test_single_variable_induced_model_is_trivial():
    p = TabularDistribution([Variable('a')], {('0',): HALF, ('1',): HALF})
    assert len(induced_model(oracle_for(p))) == 0


def test_m1_product_induced_model_contains_m1_closure(m1_dist, m1_closed):
    m = induced_model(oracle_for(m1_dist))
    assert m1_closed.statements <= m.statements


def test_induced_model_respects_cap():
    p = generate('spb-random', 7, 0)
    with pytest.raises(CapacityError):
        induced_model(oracle_for(p))


@pytest.mark.parametrize('kind', ['spb-random', 'spb-block-product', 'binary-sparse'])
@pytest.mark.parametrize('seed', [0, 1, 2])
def test_induced_models_are_graphoids(kind, seed):
    p = generate(kind, 4, seed)
    assert induced_model(oracle_for(p)).closed


def test_generators_are_deterministic():
    for kind in ('spb-random', 'spb-block-product', 'binary-sparse'):
        assert generate(kind, 4, 11) == generate(kind, 4, 11)
    first = generate('gaussian-random', 4, 11)
    second = generate('gaussian-random', 4, 11)
    np.testing.assert_array_equal(first.covariance, second.covariance)
    np.testing.assert_array_equal(first.mean, second.mean)


def test_spb_generators_are_strictly_positive():
    for seed in range(5):
        assert generate('spb-random', 4, seed).is_strictly_positive
        assert generate('spb-block-product', 4, seed).is_strictly_positive


def test_binary_sparse_has_zero_cells():
    p = generate('binary-sparse', 4, 3, {'zero_fraction': 0.25})
    assert p.is_binary
    assert not p.is_strictly_positive


def test_block_product_plants_independence():
    p = generate('spb-block-product', 4, 2, {'blocks': 'a,b|c,d'})
    assert tabular_independent(p, A | B, C | bit(3), 0)


def test_named_examples(parity_dist, pair_copy_dist):
    assert named_example('parity') == parity_dist
    assert named_example('pair-copy') == pair_copy_dist
    assert named_example('markov-chain').universe.names == ('x1', 'x2', 'x3')


def test_generate_rejects_bad_input():
    with pytest.raises(InputError):
        generate('no-such-kind', 3, 0)
    with pytest.raises(InputError):
        generate('spb-random', 0, 0)
    with pytest.raises(InputError):
        generate('spb-block-product', 4, 0, {'blocks': 'a,b|c'})
    with pytest.raises(InputError):
        generate('named-example', 0, 0, {'name': 'nothing'})
    assert 'named-example' in KINDS


def test_generate_checks_the_scheme():
    assert generate('spb-random', 3, 5, {'scheme': 'pcg64-v1'}) == generate('spb-random', 3, 5)
    with pytest.raises(InputError):
        generate('spb-random', 3, 5, {'scheme': 'mt19937'})
    with pytest.raises(InputError):
        generate('named-example', 0, 0, {'name': 'parity', 'scheme': 'mt19937'})


def test_cached_oracle_memoizes_by_canonical_triplet(parity_dist):
    oracle = CachedOracle(TabularOracle(parity_dist))
    assert oracle.independent(A, B, 0)
    assert oracle.independent(B, A, 0)
    assert oracle.queries == 1
    assert oracle.independent(A, 0, C)
    assert oracle.queries == 1


def test_oracle_for_passes_models_through(m1_closed):
    assert oracle_for(m1_closed) is m1_closed
    with pytest.raises(TypeError):
        oracle_for(object())


def test_closure_of_induced_model_adds_nothing(parity_dist):
    m = induced_model(oracle_for(parity_dist))
    reopened = type(m)(universe=m.universe, statements=m.statements)
    assert close(reopened).statements == m.statements
