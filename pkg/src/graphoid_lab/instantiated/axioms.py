"""
Value-level axiom checks: propositional transitivity and unification
"""

from dataclasses import dataclass, field
from itertools import combinations, permutations, product
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from ..distributions.gaussian import GaussianModel, gaussian_conditional
from ..graphoid.universe import Universe, VariableId, VarSet, bit, members, subsets
from ..utils.exceptions import CapacityError, InputError, ZeroEvidenceError
from ..utils.logging import get_logger, log_performance
from .model import InstantiatedModel, Value

logger = get_logger(__name__)

DEFAULT_PROPTRANS_MAX_VARIABLES = 6
DEFAULT_UNIFICATION_GRID = (-1.0, 0.0, 5.0)

# Gaussian value-level statements do not depend on the value of e, so one
# nominal pair of distinct values stands in for all of them
GAUSSIAN_VALUE_PAIR = (0.0, 1.0)


@dataclass(frozen=True)
class CellSplit:
    """
    Assignment of variables to the cells A1..A4 and B1..B4 around a
    distinguished variable e
    """
    a_cells: Tuple[VarSet, VarSet, VarSet, VarSet]
    b_cells: Tuple[VarSet, VarSet, VarSet, VarSet]
    e: VariableId

    @property
    def a(self) -> VarSet:
        a1, a2, a3, a4 = self.a_cells
        return a1 | a2 | a3 | a4

    @property
    def b(self) -> VarSet:
        b1, b2, b3, b4 = self.b_cells
        return b1 | b2 | b3 | b4

    def first_pair(self) -> Tuple[VarSet, VarSet]:
        """(A1A2B3B4, B1B2A3A4), independent at e = e'"""
        a1, a2, a3, a4 = self.a_cells
        b1, b2, b3, b4 = self.b_cells
        return a1 | a2 | b3 | b4, b1 | b2 | a3 | a4

    def second_pair(self) -> Tuple[VarSet, VarSet]:
        """(A1A3B2B4, B1B3A2A4), independent at e = e''"""
        a1, a2, a3, a4 = self.a_cells
        b1, b2, b3, b4 = self.b_cells
        return a1 | a3 | b2 | b4, b1 | b3 | a2 | a4

    def consequents(self) -> Tuple[Tuple[VarSet, VarSet], Tuple[VarSet, VarSet]]:
        """(A1, eA2A3A4B) and (B1, eAB2B3B4)"""
        a1 = self.a_cells[0]
        b1 = self.b_cells[0]
        e = bit(self.e)
        return (a1, e | (self.a & ~a1) | self.b), (b1, e | self.a | (self.b & ~b1))

    def reconstructs(self) -> bool:
        """
        Cell identities: the cells are disjoint and avoid e, and each
        antecedent side meets A and B in exactly the expected cells
        """
        a1, a2, a3, a4 = self.a_cells
        b1, b2, b3, b4 = self.b_cells
        cells = list(self.a_cells) + list(self.b_cells)
        union = 0
        for cell in cells:
            if union & cell or cell & bit(self.e):
                return False
            union |= cell

        first_left, first_right = self.first_pair()
        second_left, second_right = self.second_pair()
        return (
            union == self.a | self.b
            and first_left & self.a == a1 | a2 and first_right & self.a == a3 | a4
            and first_left & self.b == b3 | b4 and first_right & self.b == b1 | b2
            and second_left & self.a == a1 | a3 and second_right & self.a == a2 | a4
            and second_left & self.b == b2 | b4 and second_right & self.b == b1 | b3
            and first_left | first_right == union
            and second_left | second_right == union
        )

    def to_dict(self, universe: Universe) -> dict:
        result = {'e': universe.names[self.e]}
        for label, cells in (('A', self.a_cells), ('B', self.b_cells)):
            for position, cell in enumerate(cells, start=1):
                result[f"{label}{position}"] = universe.names_of(cell)
        return result


def cell_splits(universe: Universe, a: VariableId, b: VariableId,
                partial: bool = False) -> Iterator[CellSplit]:
    """
    Every choice of e outside {a, b} and every placement of the remaining
    variables into the eight cells, with a in A1 and b in B1; with partial,
    variables may also stay out of every cell
    """
    slots = 9 if partial else 8
    for e in range(universe.size):
        if e in (a, b):
            continue
        rest = [v for v in range(universe.size) if v not in (a, b, e)]
        for placement in product(range(slots), repeat=len(rest)):
            cells = [0] * 8
            cells[0] |= bit(a)
            cells[4] |= bit(b)
            for v, slot in zip(rest, placement):
                if slot < 8:
                    cells[slot] |= bit(v)
            yield CellSplit(tuple(cells[:4]), tuple(cells[4:]), e)


@dataclass
class PropTransReport:
    """Outcome of a propositional-transitivity scan"""
    passed: bool = True
    checked_instances: int = 0
    antecedent_hits: int = 0
    skipped_instances: int = 0
    violation: Optional[dict] = None

    def merge(self, other: 'PropTransReport') -> None:
        self.checked_instances += other.checked_instances
        self.antecedent_hits += other.antecedent_hits
        self.skipped_instances += other.skipped_instances
        if self.passed and not other.passed:
            self.passed = False
            self.violation = other.violation

    def to_dict(self) -> dict:
        return {
            'pass': self.passed,
            'checked_instances': self.checked_instances,
            'antecedent_hits': self.antecedent_hits,
            'skipped_instances': self.skipped_instances,
            'violation': self.violation,
        }


class _ValueLevelCache:
    """Memoized set-level and value-level answers for one model"""

    def __init__(self, m: InstantiatedModel):
        self.m = m
        self._set: Dict[Tuple[VarSet, VarSet, VarSet], bool] = {}
        self._at: Dict[Tuple[VarSet, VarSet, VariableId, Value], Optional[bool]] = {}

    def independent(self, x: VarSet, y: VarSet, z: VarSet) -> bool:
        key = (min(x, y), max(x, y), z)
        if key not in self._set:
            self._set[key] = self.m.independent(x, y, z)
        return self._set[key]

    def independent_at(self, x: VarSet, y: VarSet, e: VariableId, value: Value) -> Optional[bool]:
        """None when e = value has probability zero"""
        key = (min(x, y), max(x, y), e, value)
        if key not in self._at:
            try:
                self._at[key] = self.m.independent_at(x, y, bit(e), {e: value})
            except ZeroEvidenceError:
                self._at[key] = None
        return self._at[key]


def _values_of(m: InstantiatedModel, e: VariableId) -> Sequence[Value]:
    if m.is_gaussian:
        return GAUSSIAN_VALUE_PAIR
    return m.values_of(e)


@log_performance
def check_propositional_transitivity(m: InstantiatedModel, a: VariableId, b: VariableId,
                                     max_variables: int = DEFAULT_PROPTRANS_MAX_VARIABLES,
                                     partial: bool = False,
                                     cache: Optional[_ValueLevelCache] = None) -> PropTransReport:
    """
    Scan every instance of propositional transitivity with a in A1 and b in B1

    An instance is a cell split plus an ordered pair of distinct values
    (e', e'') of e. Wherever I(A, B; ∅), I(A1A2B3B4, B1B2A3A4; e = e') and
    I(A1A3B2B4, B1B3A2A4; e = e'') all hold, one of I(A1, eA2A3A4B; ∅) and
    I(B1, eAB2B3B4; ∅) must hold too.

    Args:
        m: Instantiated model
        a: Variable placed in A1
        b: Variable placed in B1
        max_variables: Universe size cap
        partial: Also let variables stay out of every cell
        cache: Shared answer cache across pairs

    Returns:
        PropTransReport with instance, antecedent-hit and skipped counts
    """
    universe = m.universe
    if a == b or not (0 <= a < universe.size and 0 <= b < universe.size):
        raise InputError(f"propositional transitivity needs two distinct variables, got ({a}, {b})")
    if universe.size > max_variables:
        raise CapacityError(f"propositional transitivity scan over {universe.size} variables",
                            limit=max_variables)

    cache = cache or _ValueLevelCache(m)
    report = PropTransReport()
    if universe.size < 3:
        return report

    for split in cell_splits(universe, a, b, partial):
        if not split.reconstructs():
            raise AssertionError(f"cell split {split.to_dict(universe)} breaks the cell identities")

        values = _values_of(m, split.e)
        pairs = list(permutations(values, 2))
        first_left, first_right = split.first_pair()
        second_left, second_right = split.second_pair()

        if not cache.independent(split.a, split.b, 0):
            report.checked_instances += len(pairs)
            continue

        for e_first, e_second in pairs:
            report.checked_instances += 1
            first = cache.independent_at(first_left, first_right, split.e, e_first)
            second = cache.independent_at(second_left, second_right, split.e, e_second)
            if first is None or second is None:
                report.skipped_instances += 1
                continue
            if not (first and second):
                continue

            report.antecedent_hits += 1
            (x1, y1), (x2, y2) = split.consequents()
            if cache.independent(x1, y1, 0) or cache.independent(x2, y2, 0):
                continue

            report.passed = False
            report.violation = {
                **split.to_dict(universe),
                'e_first': e_first,
                'e_second': e_second,
                'failed': [
                    f"I({universe.format(x1)}, {universe.format(y1)}; {{}})",
                    f"I({universe.format(x2)}, {universe.format(y2)}; {{}})",
                ],
            }
            logger.info(f"Propositional transitivity fails: {report.violation}")
            return report

    return report


def check_propositional_transitivity_all(m: InstantiatedModel,
                                         max_variables: int = DEFAULT_PROPTRANS_MAX_VARIABLES,
                                         partial: bool = False) -> PropTransReport:
    """Aggregate scan over every unordered pair (the axiom is symmetric in A and B)"""
    cache = _ValueLevelCache(m)
    total = PropTransReport()
    for a, b in combinations(range(m.universe.size), 2):
        total.merge(check_propositional_transitivity(m, a, b, max_variables, partial, cache))
        if not total.passed:
            break
    return total


@dataclass
class UnificationReport:
    """Value invariance of conditional covariances over a grid"""
    passed: bool = True
    checked: int = 0
    max_deviation: float = 0.0
    violation: Optional[dict] = None
    conditioning_sets: List[List[str]] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            'pass': self.passed,
            'checked': self.checked,
            'max_deviation': self.max_deviation,
            'violation': self.violation,
            'conditioning_sets': self.conditioning_sets,
        }


def check_unification(g: GaussianModel, grid: Sequence[float] = DEFAULT_UNIFICATION_GRID,
                      tolerance: Optional[float] = None,
                      max_conditioning: Optional[int] = 1) -> UnificationReport:
    """
    Conditional covariance given Z = z must not depend on z: compare the
    conditional models over every grid point against the first one

    Args:
        g: Gaussian model
        grid: Values tried for each conditioned variable (at least 3 distinct)
        tolerance: Entrywise bound (defaults to the model tolerance)
        max_conditioning: Largest |Z| tried; None tries every proper subset
    """
    if len(set(grid)) < 3:
        raise InputError("the unification grid needs at least 3 distinct values", field="grid")
    bound = g.tolerance if tolerance is None else tolerance

    universe = g.universe
    report = UnificationReport()
    for z in subsets(universe.full, nonempty=True, proper=True):
        size = len(members(z))
        if max_conditioning is not None and size > max_conditioning:
            break

        reference = None
        report.conditioning_sets.append(universe.names_of(z))
        for values in product(grid, repeat=size):
            covariance = gaussian_conditional(g, z, list(values)).covariance
            report.checked += 1
            if reference is None:
                reference = covariance
                continue
            deviation = float(np.max(np.abs(covariance - reference)))
            report.max_deviation = max(report.max_deviation, deviation)
            if deviation > bound and report.passed:
                report.passed = False
                report.violation = {
                    'Z': universe.names_of(z),
                    'values': list(values),
                    'deviation': deviation,
                }
    return report
