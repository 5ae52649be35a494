"""
Dependency models and graphoid closure

A dependency model is a set of independence triplets over a universe. The
closure engine saturates a model under trivial independence, symmetry,
decomposition, weak union and contraction.
"""

from collections import defaultdict, deque
from dataclasses import dataclass, field
from typing import (Deque, Dict, FrozenSet, Iterable, Iterator, List, Optional,
                    Protocol, Set, Tuple, runtime_checkable)

from ..utils.exceptions import CapacityError
from ..utils.logging import get_logger, log_performance
from .triplet import Triplet, check_triplet, normalize
from .universe import Universe, VarSet, subsets

logger = get_logger(__name__)

DEFAULT_CLOSURE_MAX_VARIABLES = 10

TRIVIAL_INDEPENDENCE = 'trivial_independence'
SYMMETRY = 'symmetry'
DECOMPOSITION = 'decomposition'
WEAK_UNION = 'weak_union'
CONTRACTION = 'contraction'


@runtime_checkable
class IndependenceOracle(Protocol):
    """Anything that answers "is X independent of Y given Z" over a universe"""

    universe: Universe

    def independent(self, x: VarSet, y: VarSet, z: VarSet) -> bool:
        ...


def holds(oracle: IndependenceOracle, t: Triplet) -> bool:
    return oracle.independent(t.x, t.y, t.z)


@dataclass(frozen=True)
class DependencyModel:
    """
    Explicit set of canonical triplets

    Trivial statements (empty X or Y) are never stored; membership queries
    treat them as always present.
    """
    universe: Universe
    statements: FrozenSet[Triplet] = field(default_factory=frozenset)
    closed: bool = False

    @classmethod
    def from_statements(cls, universe: Universe, statements: Iterable[Triplet],
                        closed: bool = False) -> 'DependencyModel':
        canonical = set()
        for t in statements:
            check_triplet(t.x, t.y, t.z, universe)
            if not t.is_trivial:
                canonical.add(normalize(t))
        return cls(universe=universe, statements=frozenset(canonical), closed=closed)

    def independent(self, x: VarSet, y: VarSet, z: VarSet) -> bool:
        check_triplet(x, y, z, self.universe)
        if x == 0 or y == 0:
            return True
        return normalize(Triplet(x, y, z)) in self.statements

    def __contains__(self, t: Triplet) -> bool:
        return self.independent(t.x, t.y, t.z)

    def __len__(self) -> int:
        return len(self.statements)

    def sorted_statements(self) -> List[Triplet]:
        return sorted(self.statements)


@dataclass(frozen=True)
class ClosureCheck:
    """Outcome of is_closed; carries the first violated axiom when not closed"""
    closed: bool
    axiom: Optional[str] = None
    premises: Tuple[Triplet, ...] = ()
    missing: Optional[Triplet] = None

    def __bool__(self) -> bool:
        return self.closed

    def to_dict(self, universe: Universe) -> dict:
        result = {'closed': self.closed}
        if not self.closed:
            result['axiom'] = self.axiom
            result['premises'] = [t.render(universe) for t in self.premises]
            result['missing'] = self.missing.render(universe) if self.missing else None
        return result


class _StatementIndex:
    """Oriented statements keyed by (X, Z), holding the set of Y sides"""

    def __init__(self):
        self._by_xz: Dict[Tuple[VarSet, VarSet], Set[VarSet]] = defaultdict(set)

    def contains(self, x: VarSet, y: VarSet, z: VarSet) -> bool:
        if x == 0 or y == 0:
            return True
        return y in self._by_xz.get((x, z), ())

    def add(self, x: VarSet, y: VarSet, z: VarSet) -> bool:
        """Add both orientations; False if already present"""
        if self.contains(x, y, z):
            return False
        self._by_xz[(x, z)].add(y)
        self._by_xz[(y, z)].add(x)
        return True

    def partners(self, x: VarSet, z: VarSet) -> List[VarSet]:
        return sorted(self._by_xz.get((x, z), ()))

    def triplets(self) -> Iterator[Triplet]:
        for (x, z), ys in self._by_xz.items():
            for y in ys:
                yield Triplet(x, y, z)


def _consequences(index: _StatementIndex, x: VarSet, y: VarSet, z: VarSet):
    """
    Single-step consequences of the oriented statement I(x, y; z) together
    with what the index already holds.

    Yields (axiom, premises, conclusion) with premises and conclusion as
    oriented (x, y, z) tuples.
    """
    premise = (x, y, z)

    for part in subsets(y, nonempty=True, proper=True):
        rest = y & ~part
        yield DECOMPOSITION, (premise,), (x, part, z)
        yield WEAK_UNION, (premise,), (x, part, z | rest)

    # I(x, y; z) as the first contraction premise, I(x, w; z ∪ y) as the second
    for w in index.partners(x, z | y):
        yield CONTRACTION, (premise, (x, w, z | y)), (x, y | w, z)

    # I(x, y; z) as the second premise, with z = z' ∪ s and I(x, s; z') stored
    for s in subsets(z, nonempty=True):
        if index.contains(x, s, z & ~s):
            yield CONTRACTION, ((x, s, z & ~s), premise), (x, s | y, z & ~s)


@log_performance
def close(m: DependencyModel, max_variables: int = DEFAULT_CLOSURE_MAX_VARIABLES) -> DependencyModel:
    """
    Least superset of m closed under the graphoid axioms

    Args:
        m: Seed dependency model
        max_variables: Universe size cap

    Returns:
        Closed DependencyModel
    """
    if m.universe.size > max_variables:
        raise CapacityError(
            f"closure over {m.universe.size} variables", limit=max_variables
        )
    if m.closed and is_closed(m).closed:
        return m

    index = _StatementIndex()
    worklist: Deque[Tuple[VarSet, VarSet, VarSet]] = deque()

    def add(x: VarSet, y: VarSet, z: VarSet) -> None:
        if index.add(x, y, z):
            worklist.append((x, y, z))
            worklist.append((y, x, z))

    for t in m.sorted_statements():
        add(t.x, t.y, t.z)

    while worklist:
        x, y, z = worklist.popleft()
        for _, _, (cx, cy, cz) in _consequences(index, x, y, z):
            add(cx, cy, cz)

    closed = DependencyModel.from_statements(
        m.universe,
        index.triplets(),
        closed=True,
    )
    logger.debug(f"Closed {len(m)} seed statements into {len(closed)} statements")
    return closed


def is_closed(m: DependencyModel) -> ClosureCheck:
    """
    Check that every single axiom application to statements of m lands in m

    Trivial independence and symmetry hold by construction of the canonical
    representation, so the scan covers decomposition, weak union and
    contraction over both orientations of every statement.
    """
    index = _StatementIndex()
    for t in m.statements:
        index.add(t.x, t.y, t.z)

    for t in m.sorted_statements():
        for x, y in ((t.x, t.y), (t.y, t.x)):
            for axiom, premises, (cx, cy, cz) in _consequences(index, x, y, t.z):
                if not index.contains(cx, cy, cz):
                    return ClosureCheck(
                        closed=False,
                        axiom=axiom,
                        premises=tuple(Triplet(*p) for p in premises),
                        missing=Triplet(cx, cy, cz),
                    )

    return ClosureCheck(closed=True)
