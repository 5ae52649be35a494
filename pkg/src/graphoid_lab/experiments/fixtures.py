"""
Seeded fixtures for the experiment suites
"""

from itertools import islice, permutations
from typing import Any, List, Mapping, Optional, Tuple, Union

from ..distributions.gaussian import GaussianModel
from ..distributions.generators import generate, make_rng
from ..distributions.oracles import DEFAULT_INDUCED_MAX_VARIABLES, induced_model, oracle_for
from ..distributions.tabular import TabularDistribution
from ..graphoid.model import DependencyModel, close
from ..graphoid.triplet import Triplet
from ..graphoid.universe import Universe, VariableId, bit, subsets
from ..utils.exceptions import InputError

SEED_STRIDE = 1_000_003

Fixture = Union[TabularDistribution, GaussianModel]
GeneratorParams = Optional[Mapping[str, Any]]

INDUCED_KINDS = ('spb-random', 'spb-block-product', 'gaussian-block')


def trial_seed(seed: int, index: int) -> int:
    """Seed of trial `index` in a run seeded with `seed`"""
    return seed * SEED_STRIDE + index


def binary_fixture(n: int, seed: int, index: int,
                   params: GeneratorParams = None) -> Tuple[str, TabularDistribution]:
    """
    Strictly positive binary distribution; odd trials use block products so
    that independence structure, and with it non-vacuous axiom instances,
    actually occurs
    """
    kind = 'spb-block-product' if index % 2 else 'spb-random'
    return kind, generate(kind, n, seed, params)


def gaussian_fixture(n: int, seed: int, index: int,
                     params: GeneratorParams = None) -> Tuple[str, GaussianModel]:
    kind = 'gaussian-block' if index % 2 else 'gaussian-random'
    return kind, generate(kind, n, seed, params)


def sparse_fixture(n: int, seed: int, params: GeneratorParams = None) -> Tuple[str, TabularDistribution]:
    return 'binary-sparse', generate('binary-sparse', n, seed, params)


def induced_fixture(n: int, seed: int, index: int, params: GeneratorParams = None,
                    max_variables: int = DEFAULT_INDUCED_MAX_VARIABLES) -> Tuple[str, DependencyModel]:
    """
    Dependency model induced by a generated distribution, cycling through
    INDUCED_KINDS by index
    """
    kind = INDUCED_KINDS[index % len(INDUCED_KINDS)]
    return f"induced-{kind}", induced_model(oracle_for(generate(kind, n, seed, params)), max_variables)


def random_closed_model(n: int, seed: int, statements: int = 0,
                        max_variables: int = 10) -> DependencyModel:
    """
    Closure of a few random nontrivial triplets over n variables

    Args:
        n: Variable count
        seed: Integer seed
        statements: Number of seed triplets (default: 1 to n)
        max_variables: Closure cap
    """
    if n < 2:
        raise InputError(f"closed model fixtures need at least 2 variables, got {n}", field="n")
    rng = make_rng(seed)
    universe = Universe([chr(ord('a') + i) if n <= 26 else f"v{i + 1}" for i in range(n)])
    count = statements or int(rng.integers(1, n + 1))

    seeds: List[Triplet] = []
    while len(seeds) < count:
        # Each variable lands in X, Y, Z or nowhere
        slots = rng.integers(0, 4, size=n)
        x = sum(bit(i) for i in range(n) if slots[i] == 0)
        y = sum(bit(i) for i in range(n) if slots[i] == 1)
        z = sum(bit(i) for i in range(n) if slots[i] == 2)
        if x and y:
            seeds.append(Triplet(x, y, z))
    return close(DependencyModel.from_statements(universe, seeds), max_variables)


def orderings(n: int, seed: int, full_max: int, sampled: int) -> List[Tuple[VariableId, ...]]:
    """
    All n! orderings when n <= full_max, else the identity plus sampled-1
    seeded random permutations (duplicates allowed)
    """
    if n <= full_max:
        return list(permutations(range(n)))
    rng = make_rng(seed)
    result = [tuple(range(n))]
    result.extend(tuple(int(v) for v in rng.permutation(n)) for _ in range(max(sampled - 1, 0)))
    return result


def disjoint_set_triples(full: int, limit: int = 0):
    """
    (A, B, C) with A, B, C nonempty and pairwise disjoint; optional limit on
    the number produced
    """
    def generate_all():
        for a in subsets(full, nonempty=True):
            for b in subsets(full & ~a, nonempty=True):
                for c in subsets(full & ~(a | b), nonempty=True):
                    if b < c:
                        yield a, b, c

    return islice(generate_all(), limit) if limit else generate_all()
