"""
Unrelatedness notions: total independence, total uncoupledness and total
disconnectedness, plus the model-level properties transitivity and
separability.

All scans are exhaustive with fixed enumeration orders (subsets by
cardinality then lexicographically, partitions by bitmask value), so
witnesses are reproducible.
"""

from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Iterator, List, Optional, Tuple

from ..graphoid.model import IndependenceOracle
from ..graphoid.triplet import check_triplet
from ..graphoid.universe import Universe, VariableId, VarSet, bit, members, subsets
from ..network.belief import BeliefNetwork, build, component_of
from ..utils.exceptions import CapacityError, InputError
from ..utils.logging import get_logger, log_performance

logger = get_logger(__name__)

DEFAULT_UNCOUPLED_MAX_VARIABLES = 12

Partition = Tuple[VarSet, VarSet]


def _check_pair(oracle: IndependenceOracle, a: VariableId, b: VariableId) -> None:
    size = oracle.universe.size
    if not (0 <= a < size and 0 <= b < size):
        raise InputError(f"pair ({a}, {b}) lies outside the universe")
    if a == b:
        raise InputError(f"pair needs two distinct variables, got '{oracle.universe.names[a]}' twice")


def _check_sets(oracle: IndependenceOracle, a: VarSet, b: VarSet) -> None:
    check_triplet(a, b, 0, oracle.universe)
    if a == 0 or b == 0:
        raise InputError("both sets must be nonempty")


def _ascending_submasks(mask: VarSet) -> Iterator[VarSet]:
    """Subsets of mask in increasing bitmask value"""
    items = members(mask)
    for counter in range(1 << len(items)):
        sub = 0
        for position, index in enumerate(items):
            if counter >> position & 1:
                sub |= 1 << index
        yield sub


def independence_failure(oracle: IndependenceOracle, a: VarSet, b: VarSet) -> Optional[VarSet]:
    """First conditioning set Z outside A ∪ B with (A, B; Z) not a member, or None"""
    rest = oracle.universe.full & ~(a | b)
    for z in subsets(rest):
        if not oracle.independent(a, b, z):
            return z
    return None


def totally_independent_sets(oracle: IndependenceOracle, a: VarSet, b: VarSet) -> bool:
    """(A, B; Z) holds for every Z drawn from the remaining variables"""
    _check_sets(oracle, a, b)
    return independence_failure(oracle, a, b) is None


def totally_independent_pair(oracle: IndependenceOracle, a: VariableId, b: VariableId) -> bool:
    _check_pair(oracle, a, b)
    return independence_failure(oracle, bit(a), bit(b)) is None


def interact(oracle: IndependenceOracle, a: VariableId, b: VariableId) -> bool:
    return not totally_independent_pair(oracle, a, b)


@dataclass(frozen=True)
class Uncoupling:
    """Result of an uncoupledness scan; witness is (U1, U2) when uncoupled"""
    uncoupled: bool
    witness: Optional[Partition] = None

    def __bool__(self) -> bool:
        return self.uncoupled

    def to_dict(self, universe: Universe) -> dict:
        result = {'totally_uncoupled': self.uncoupled}
        if self.witness is not None:
            result['witness'] = [universe.names_of(self.witness[0]), universe.names_of(self.witness[1])]
        return result


def totally_uncoupled_sets(oracle: IndependenceOracle, a: VarSet, b: VarSet,
                           max_variables: int = DEFAULT_UNCOUPLED_MAX_VARIABLES) -> Uncoupling:
    """
    Scan partitions U1 ⊇ A, U2 ⊇ B of the universe for marginal
    independence (U1, U2; ∅), in increasing bitmask order of U1

    Raises:
        CapacityError: universe larger than max_variables
    """
    _check_sets(oracle, a, b)
    universe = oracle.universe
    if universe.size > max_variables:
        raise CapacityError(f"partition scan over {universe.size} variables", limit=max_variables)

    rest = universe.full & ~(a | b)
    for extra in _ascending_submasks(rest):
        left = a | extra
        right = universe.full & ~left
        if oracle.independent(left, right, 0):
            return Uncoupling(True, (left, right))
    return Uncoupling(False)


def totally_uncoupled_pair(oracle: IndependenceOracle, a: VariableId, b: VariableId,
                           max_variables: int = DEFAULT_UNCOUPLED_MAX_VARIABLES) -> Uncoupling:
    _check_pair(oracle, a, b)
    return totally_uncoupled_sets(oracle, bit(a), bit(b), max_variables)


@dataclass(frozen=True)
class Disconnection:
    """Result of the single-ordering disconnectedness check"""
    disconnected: bool
    network: BeliefNetwork

    def __bool__(self) -> bool:
        return self.disconnected


def pair_ordering(universe: Universe, a: VariableId, b: VariableId) -> List[VariableId]:
    """a first, b second, then the rest in universe order"""
    return [a, b] + [i for i in range(universe.size) if i not in (a, b)]


def totally_disconnected_pair(oracle: IndependenceOracle, a: VariableId, b: VariableId) -> Disconnection:
    """
    Build one network with a first and b second and report whether a and b
    fall in different components; components do not depend on the ordering,
    so one network decides the question for all of them
    """
    _check_pair(oracle, a, b)
    net = build(oracle, pair_ordering(oracle.universe, a, b))
    return Disconnection(disconnected=not component_of(net, a) & bit(b), network=net)


@dataclass
class PairVerdict:
    """All unrelatedness verdicts for one pair"""
    a: VariableId
    b: VariableId
    totally_independent: bool
    totally_uncoupled: bool
    totally_disconnected: bool
    witness: Optional[Partition] = None
    network: Optional[BeliefNetwork] = None

    @property
    def interact(self) -> bool:
        return not self.totally_independent

    def to_dict(self, universe: Universe) -> dict:
        result = {
            'a': universe.names[self.a],
            'b': universe.names[self.b],
            'totally_independent': self.totally_independent,
            'interact': self.interact,
            'totally_uncoupled': self.totally_uncoupled,
            'totally_disconnected': self.totally_disconnected,
        }
        if self.witness is not None:
            result['witness'] = [universe.names_of(self.witness[0]), universe.names_of(self.witness[1])]
        if self.network is not None:
            result['network'] = self.network.to_dict()
        return result


def pair_verdict(oracle: IndependenceOracle, a: VariableId, b: VariableId,
                 max_variables: int = DEFAULT_UNCOUPLED_MAX_VARIABLES) -> PairVerdict:
    uncoupling = totally_uncoupled_pair(oracle, a, b, max_variables)
    disconnection = totally_disconnected_pair(oracle, a, b)
    verdict = PairVerdict(
        a=a,
        b=b,
        totally_independent=totally_independent_pair(oracle, a, b),
        totally_uncoupled=uncoupling.uncoupled,
        totally_disconnected=disconnection.disconnected,
        witness=uncoupling.witness,
        network=disconnection.network,
    )
    if verdict.totally_uncoupled != verdict.totally_disconnected:
        names = oracle.universe.names
        logger.warning(
            f"Uncoupled/disconnected verdicts disagree for ({names[a]}, {names[b]}): "
            f"uncoupled={verdict.totally_uncoupled}, disconnected={verdict.totally_disconnected}"
        )
    return verdict


@dataclass(frozen=True)
class TransitivityCheck:
    transitive: bool
    counterexample: Optional[Tuple[VariableId, VariableId, VariableId]] = None

    def __bool__(self) -> bool:
        return self.transitive

    def to_dict(self, universe: Universe) -> dict:
        result = {'transitive': self.transitive}
        if self.counterexample is not None:
            result['counterexample'] = [universe.names[i] for i in self.counterexample]
        return result


@dataclass(frozen=True)
class SeparabilityCheck:
    separable: bool
    counterexample: Optional[Tuple[VariableId, VariableId]] = None

    def __bool__(self) -> bool:
        return self.separable

    def to_dict(self, universe: Universe) -> dict:
        result = {'separable': self.separable}
        if self.counterexample is not None:
            result['counterexample'] = [universe.names[i] for i in self.counterexample]
        return result


def interaction_matrix(oracle: IndependenceOracle) -> List[List[bool]]:
    n = oracle.universe.size
    matrix = [[False] * n for _ in range(n)]
    for a, b in combinations(range(n), 2):
        matrix[a][b] = matrix[b][a] = interact(oracle, a, b)
    return matrix


def is_transitive(oracle: IndependenceOracle) -> TransitivityCheck:
    """
    interact(a, b) and interact(b, c) imply interact(a, c), over all ordered
    triples of distinct variables in lexicographic order
    """
    matrix = interaction_matrix(oracle)
    for a, b, c in permutations(range(oracle.universe.size), 3):
        if matrix[a][b] and matrix[b][c] and not matrix[a][c]:
            return TransitivityCheck(False, (a, b, c))
    return TransitivityCheck(True)


def is_separable(oracle: IndependenceOracle,
                 max_variables: int = DEFAULT_UNCOUPLED_MAX_VARIABLES) -> SeparabilityCheck:
    """Every totally independent pair is totally uncoupled"""
    for a, b in combinations(range(oracle.universe.size), 2):
        if totally_independent_pair(oracle, a, b) and not totally_uncoupled_pair(oracle, a, b, max_variables):
            return SeparabilityCheck(False, (a, b))
    return SeparabilityCheck(True)


@dataclass
class ModelAnalysis:
    """Pair verdicts plus the model-level flags"""
    universe: Universe
    verdicts: List[PairVerdict] = field(default_factory=list)
    transitivity: TransitivityCheck = field(default_factory=lambda: TransitivityCheck(True))
    separability: SeparabilityCheck = field(default_factory=lambda: SeparabilityCheck(True))

    def to_dict(self) -> dict:
        return {
            'variables': list(self.universe.names),
            'pairs': [verdict.to_dict(self.universe) for verdict in self.verdicts],
            **self.transitivity.to_dict(self.universe),
            **self.separability.to_dict(self.universe),
        }


@log_performance
def analyze_model(oracle: IndependenceOracle,
                  max_variables: int = DEFAULT_UNCOUPLED_MAX_VARIABLES,
                  include_networks: bool = False) -> ModelAnalysis:
    """
    Verdicts for every pair and the transitivity/separability flags

    Args:
        oracle: Independence oracle
        max_variables: Cap for the partition scan
        include_networks: Keep the network built for each pair in its verdict
    """
    verdicts = []
    for a, b in combinations(range(oracle.universe.size), 2):
        verdict = pair_verdict(oracle, a, b, max_variables)
        if not include_networks:
            verdict.network = None
        verdicts.append(verdict)

    separability = SeparabilityCheck(True)
    for verdict in verdicts:
        if verdict.totally_independent and not verdict.totally_uncoupled:
            separability = SeparabilityCheck(False, (verdict.a, verdict.b))
            break

    return ModelAnalysis(
        universe=oracle.universe,
        verdicts=verdicts,
        transitivity=is_transitive(oracle),
        separability=separability,
    )


@dataclass(frozen=True)
class ConnectednessCheck:
    """Pairs where connectedness in one network disagrees with interaction"""
    matches: bool
    mismatches: Tuple[Tuple[VariableId, VariableId], ...] = ()

    def __bool__(self) -> bool:
        return self.matches


def connectedness_matches_interaction(oracle: IndependenceOracle,
                                      net: Optional[BeliefNetwork] = None) -> ConnectednessCheck:
    """
    Compare "connected in a belief network" with "interact" for every pair;
    the network defaults to the one built in universe order
    """
    if net is None:
        net = build(oracle, list(range(oracle.universe.size)))

    mismatches = []
    for a, b in combinations(range(oracle.universe.size), 2):
        connected = bool(component_of(net, a) & bit(b))
        if connected != interact(oracle, a, b):
            mismatches.append((a, b))
    return ConnectednessCheck(matches=not mismatches, mismatches=tuple(mismatches))


def component_unions(components: List[VarSet]) -> Iterator[Partition]:
    """
    Every pair (A, B) of disjoint nonempty unions of components, each
    unordered pair listed once with A < B
    """
    for code in range(3 ** len(components)):
        a = b = 0
        for component in components:
            code, slot = divmod(code, 3)
            if slot == 1:
                a |= component
            elif slot == 2:
                b |= component
        if a and b and a < b:
            yield a, b
