"""
Deterministic fixture generators

Every generator draws from numpy's PCG64 bit generator seeded with the given
integer ("pcg64-v1"), so fixtures are reproducible bit-for-bit for a fixed
(kind, n, seed, params).
"""

import string
from fractions import Fraction
from itertools import product
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple, Union

import numpy as np

from ..utils.exceptions import InputError
from ..utils.logging import get_logger
from .gaussian import DEFAULT_TOLERANCE, GaussianModel
from .tabular import BINARY_DOMAIN, TabularDistribution, Variable

logger = get_logger(__name__)

SCHEME = 'pcg64-v1'

KINDS = (
    'spb-random',
    'spb-block-product',
    'binary-sparse',
    'gaussian-random',
    'gaussian-block',
    'named-example',
)

NAMED_EXAMPLES = ('parity', 'pair-copy', 'm1-product', 'markov-chain')

DEFAULT_MAX_WEIGHT = 16
DEFAULT_EPSILON = 0.1
DEFAULT_ZERO_FRACTION = 0.25

Generated = Union[TabularDistribution, GaussianModel]


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(int(seed)))


def variable_names(n: int, gaussian: bool = False) -> List[str]:
    """a, b, c, ... for discrete fixtures; x1, x2, ... for Gaussian ones"""
    if gaussian or n > len(string.ascii_lowercase):
        return [f"x{i + 1}" for i in range(n)]
    return list(string.ascii_lowercase[:n])


def parse_blocks(spec: Union[str, Sequence[Sequence[Any]]], names: Sequence[str]) -> List[List[int]]:
    """
    Parse a block partition, either "a,b|c,d" or a list of lists of names or
    indices, and check that it partitions the variables
    """
    if isinstance(spec, str):
        raw = [[item.strip() for item in part.split(',') if item.strip()]
               for part in spec.split('|')]
    else:
        raw = [list(block) for block in spec]

    blocks: List[List[int]] = []
    for block in raw:
        indices = []
        for item in block:
            if isinstance(item, int):
                index = item
            elif item in names:
                index = list(names).index(item)
            else:
                raise InputError(f"unknown variable '{item}' in block spec", field="blocks")
            indices.append(index)
        if not indices:
            raise InputError("blocks must be nonempty", field="blocks")
        blocks.append(sorted(indices))

    flat = sorted(i for block in blocks for i in block)
    if flat != list(range(len(names))):
        raise InputError(f"blocks {spec!r} do not partition {list(names)}", field="blocks")
    return blocks


def random_blocks(rng: np.random.Generator, n: int, max_blocks: Optional[int] = None) -> List[List[int]]:
    """Random partition of range(n) into at least two blocks when n > 1"""
    if n == 1:
        return [[0]]
    count = int(rng.integers(2, min(n, max_blocks or n) + 1))
    labels = list(range(count)) + [int(v) for v in rng.integers(0, count, size=n - count)]
    rng.shuffle(labels)
    blocks = [[i for i in range(n) if labels[i] == b] for b in range(count)]
    return [block for block in blocks if block]


def _binary_weights(rng: np.random.Generator, n: int, max_weight: int) -> Dict[tuple, int]:
    cells = list(product(BINARY_DOMAIN, repeat=n))
    weights = rng.integers(1, max_weight + 1, size=len(cells))
    return {cell: int(w) for cell, w in zip(cells, weights)}


def spb_random(n: int, seed: int, max_weight: int = DEFAULT_MAX_WEIGHT,
               names: Optional[Sequence[str]] = None) -> TabularDistribution:
    """Strictly-positive binary distribution with integer cell weights in [1, max_weight]"""
    names = list(names or variable_names(n))
    rng = make_rng(seed)
    variables = [Variable(name, BINARY_DOMAIN) for name in names]
    return TabularDistribution.from_weights(variables, _binary_weights(rng, n, max_weight))


def product_distribution(parts: Sequence[TabularDistribution],
                         names: Sequence[str], blocks: Sequence[Sequence[int]]) -> TabularDistribution:
    """Product of independent block distributions, laid out over names"""
    variables: List[Optional[Variable]] = [None] * len(names)
    for part, block in zip(parts, blocks):
        for variable, index in zip(part.variables, block):
            variables[index] = Variable(names[index], variable.domain)

    table: Dict[tuple, Fraction] = {}
    supports = [list(part.support().items()) for part in parts]
    for combo in product(*supports):
        cell: List[Optional[str]] = [None] * len(names)
        prob = Fraction(1)
        for (key, p), block in zip(combo, blocks):
            prob *= p
            for value, index in zip(key, block):
                cell[index] = value
        table[tuple(cell)] = prob
    return TabularDistribution(variables, table)


def spb_block_product(n: int, seed: int, blocks: Union[str, Sequence[Sequence[Any]], None] = None,
                      max_weight: int = DEFAULT_MAX_WEIGHT) -> TabularDistribution:
    """Product of independent spb-random blocks; plants exact independencies"""
    names = variable_names(n)
    rng = make_rng(seed)
    if blocks is None:
        parsed = random_blocks(rng, n)
    else:
        parsed = parse_blocks(blocks, names)

    parts = []
    for block in parsed:
        block_seed = int(rng.integers(0, 2 ** 31))
        parts.append(spb_random(len(block), block_seed, max_weight))
    return product_distribution(parts, names, parsed)


def binary_sparse(n: int, seed: int, max_weight: int = DEFAULT_MAX_WEIGHT,
                  zero_fraction: float = DEFAULT_ZERO_FRACTION) -> TabularDistribution:
    """Binary distribution with a fraction of zero cells (not strictly positive)"""
    rng = make_rng(seed)
    weights = _binary_weights(rng, n, max_weight)
    cells = sorted(weights)
    zeros = min(int(round(zero_fraction * len(cells))), len(cells) - 1)
    for position in rng.choice(len(cells), size=zeros, replace=False):
        weights[cells[int(position)]] = 0
    variables = [Variable(name, BINARY_DOMAIN) for name in variable_names(n)]
    return TabularDistribution.from_weights(variables, weights)


def gaussian_random(n: int, seed: int, epsilon: float = DEFAULT_EPSILON,
                    tolerance: float = DEFAULT_TOLERANCE) -> GaussianModel:
    """Covariance A·Aᵀ + εI with A standard normal; mean standard normal"""
    rng = make_rng(seed)
    a = rng.standard_normal((n, n))
    mean = rng.standard_normal(n)
    covariance = a @ a.T + epsilon * np.eye(n)
    return GaussianModel(variable_names(n, gaussian=True), mean, covariance, tolerance)


def gaussian_block(n: int, seed: int, blocks: Union[str, Sequence[Sequence[Any]], None] = None,
                   epsilon: float = DEFAULT_EPSILON,
                   tolerance: float = DEFAULT_TOLERANCE) -> GaussianModel:
    """Block-diagonal version of gaussian_random"""
    names = variable_names(n, gaussian=True)
    rng = make_rng(seed)
    parsed = random_blocks(rng, n) if blocks is None else parse_blocks(blocks, names)

    covariance = np.zeros((n, n))
    for block in parsed:
        a = rng.standard_normal((len(block), len(block)))
        covariance[np.ix_(block, block)] = a @ a.T + epsilon * np.eye(len(block))
    mean = rng.standard_normal(n)
    return GaussianModel(names, mean, covariance, tolerance)


def parity() -> TabularDistribution:
    """a, b independent fair bits, c = a xor b"""
    variables = [Variable(name, BINARY_DOMAIN) for name in 'abc']
    table = {}
    for a, b in product((0, 1), repeat=2):
        table[(str(a), str(b), str(a ^ b))] = Fraction(1, 4)
    return TabularDistribution(variables, table)


PAIR_VALUES = ('00', '01', '10', '11')


def pair_copy() -> TabularDistribution:
    """a, b independent fair bits, c = (a, b) over four values written 'ab'"""
    variables = [Variable('a'), Variable('b'), Variable('c', PAIR_VALUES)]
    table = {}
    for a, b in product('01', repeat=2):
        table[(a, b, a + b)] = Fraction(1, 4)
    return TabularDistribution(variables, table)


def m1_product(seed: int = 0, max_weight: int = DEFAULT_MAX_WEIGHT) -> TabularDistribution:
    """Strictly positive product P(a, b)·P(c, d)"""
    return spb_block_product(4, seed, blocks='a,b|c,d', max_weight=max_weight)


def markov_chain(tolerance: float = DEFAULT_TOLERANCE) -> GaussianModel:
    """Gaussian chain x1 -> x2 -> x3 with unit variances"""
    covariance = [[1.0, 0.5, 0.25], [0.5, 1.0, 0.5], [0.25, 0.5, 1.0]]
    return GaussianModel(['x1', 'x2', 'x3'], [0.0, 0.0, 0.0], covariance, tolerance)


def named_example(name: str, seed: int = 0, **params: Any) -> Generated:
    if name == 'parity':
        return parity()
    if name == 'pair-copy':
        return pair_copy()
    if name == 'm1-product':
        return m1_product(seed, params.get('max_weight', DEFAULT_MAX_WEIGHT))
    if name == 'markov-chain':
        return markov_chain(params.get('tolerance', DEFAULT_TOLERANCE))
    raise InputError(f"unknown named example '{name}' (choose from {', '.join(NAMED_EXAMPLES)})",
                     field="name")


def generate(kind: str, n: int, seed: int, params: Optional[Mapping[str, Any]] = None) -> Generated:
    """
    Build a fixture distribution

    Args:
        kind: One of KINDS
        n: Variable count (ignored by named examples)
        seed: Integer seed
        params: Kind-specific parameters (blocks, max_weight, epsilon,
            tolerance, zero_fraction, name) and the generator scheme

    Returns:
        TabularDistribution or GaussianModel
    """
    params = dict(params or {})
    if kind not in KINDS:
        raise InputError(f"unknown generator kind '{kind}' (choose from {', '.join(KINDS)})",
                         field="kind")
    if kind != 'named-example' and n < 1:
        raise InputError(f"variable count must be at least 1, got {n}", field="n")
    scheme = params.pop('scheme', SCHEME)
    if scheme != SCHEME:
        raise InputError(f"unsupported generator scheme '{scheme}' (this build uses {SCHEME})",
                         field="scheme")

    logger.debug(f"Generating {kind} with n={n}, seed={seed}, params={params}")
    max_weight = int(params.get('max_weight', DEFAULT_MAX_WEIGHT))
    epsilon = float(params.get('epsilon', DEFAULT_EPSILON))
    tolerance = float(params.get('tolerance', DEFAULT_TOLERANCE))

    if kind == 'spb-random':
        return spb_random(n, seed, max_weight)
    if kind == 'spb-block-product':
        return spb_block_product(n, seed, params.get('blocks'), max_weight)
    if kind == 'binary-sparse':
        return binary_sparse(n, seed, max_weight,
                             float(params.get('zero_fraction', DEFAULT_ZERO_FRACTION)))
    if kind == 'gaussian-random':
        return gaussian_random(n, seed, epsilon, tolerance)
    if kind == 'gaussian-block':
        return gaussian_block(n, seed, params.get('blocks'), epsilon, tolerance)

    name = params.pop('name', None)
    if name is None:
        raise InputError("named-example needs a 'name' parameter", field="name")
    return named_example(name, seed, **params)


def hypothesis_values(count: int) -> Tuple[str, ...]:
    return tuple(f"h{i + 1}" for i in range(count))


def similarity_fixture(seed: int, values: Optional[int] = None, symptoms: Optional[int] = None,
                       max_weight: int = DEFAULT_MAX_WEIGHT) -> TabularDistribution:
    """
    Strictly positive hypothesis/symptom distribution

    The hypothesis h takes 3 to 4 values; each binary symptom s1, s2, ...
    depends on h through a random grouping of its values, on one earlier
    symptom, or on nothing. Every conditional probability is k/(max_weight + 1)
    with k in [1, max_weight], so no cell is zero.
    """
    rng = make_rng(seed)
    count = values or int(rng.integers(3, 5))
    width = symptoms or int(rng.integers(3, 6))
    h_domain = hypothesis_values(count)
    denominator = max_weight + 1

    prior_weights = [int(w) for w in rng.integers(1, max_weight + 1, size=count)]
    prior = [Fraction(w, sum(prior_weights)) for w in prior_weights]

    # Per symptom: ('h', group per h value), ('s', earlier symptom) or ('none',)
    parents: List[tuple] = []
    tables: List[Dict[Any, Fraction]] = []
    for j in range(width):
        choice = int(rng.integers(0, 3)) if j else int(rng.integers(0, 2))
        if choice == 0:
            groups = [int(g) for g in rng.integers(0, 2, size=count)]
            per_group = {g: Fraction(int(rng.integers(1, max_weight + 1)), denominator) for g in (0, 1)}
            parents.append(('h', groups))
            tables.append({v: per_group[groups[v]] for v in range(count)})
        elif choice == 1:
            parents.append(('none',))
            tables.append({None: Fraction(int(rng.integers(1, max_weight + 1)), denominator)})
        else:
            source = int(rng.integers(0, j))
            parents.append(('s', source))
            tables.append({bit_value: Fraction(int(rng.integers(1, max_weight + 1)), denominator)
                           for bit_value in BINARY_DOMAIN})

    variables = [Variable('h', h_domain)] + [Variable(f"s{j + 1}", BINARY_DOMAIN) for j in range(width)]
    table: Dict[tuple, Fraction] = {}
    for h_index in range(count):
        for bits in product(BINARY_DOMAIN, repeat=width):
            prob = prior[h_index]
            for j, value in enumerate(bits):
                kind = parents[j][0]
                if kind == 'h':
                    one = tables[j][h_index]
                elif kind == 'none':
                    one = tables[j][None]
                else:
                    one = tables[j][bits[parents[j][1]]]
                prob *= one if value == '1' else 1 - one
            table[(h_domain[h_index],) + bits] = prob
    return TabularDistribution(variables, table)
