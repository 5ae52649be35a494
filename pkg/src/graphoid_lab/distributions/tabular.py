"""
Exact-rational tabular distributions over finite domains

All arithmetic uses fractions.Fraction; no tolerance appears anywhere on the
discrete path.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

from ..graphoid.triplet import check_triplet
from ..graphoid.universe import Universe, VariableId, VarSet, members
from ..utils.exceptions import DomainError, ZeroEvidenceError
from ..utils.logging import get_logger

logger = get_logger(__name__)

BINARY_DOMAIN = ('0', '1')

Assignment = Mapping[VariableId, str]
Cell = Tuple[str, ...]


@dataclass(frozen=True)
class Variable:
    """A named variable with a finite, ordered domain of string values"""
    name: str
    domain: Tuple[str, ...] = BINARY_DOMAIN

    def __post_init__(self):
        if not self.domain:
            raise DomainError(f"variable '{self.name}' has an empty domain")
        if len(set(self.domain)) != len(self.domain):
            raise DomainError(f"variable '{self.name}' has repeated domain values")


class TabularDistribution:
    """
    Joint probability table over the Cartesian product of variable domains

    Cells are keyed by full value tuples in variable order. Cells missing from
    the input table have probability zero. A table over no variables
    has the single empty cell with probability one.
    """

    def __init__(self, variables: Sequence[Variable], table: Mapping[Cell, Fraction]):
        self.variables: Tuple[Variable, ...] = tuple(variables)
        self.universe = Universe([v.name for v in self.variables], allow_empty=True)

        cells: Dict[Cell, Fraction] = {}
        for key, value in table.items():
            key = tuple(key)
            self._check_cell(key)
            p = Fraction(value)
            if p < 0:
                raise DomainError(f"negative probability {p} for cell {key}")
            if p:
                cells[key] = cells.get(key, Fraction(0)) + p

        total = sum(cells.values(), Fraction(0))
        if total != 1:
            raise DomainError(f"probabilities sum to {total}, expected exactly 1")

        self._cells = cells
        self._marginals: Dict[VarSet, Dict[Cell, Fraction]] = {}

    @classmethod
    def from_weights(cls, variables: Sequence[Variable],
                     weights: Mapping[Cell, int]) -> 'TabularDistribution':
        """Normalize nonnegative integer weights into an exact distribution"""
        total = sum(weights.values())
        if total <= 0:
            raise DomainError("weights must have a positive sum")
        return cls(variables, {cell: Fraction(w, total) for cell, w in weights.items()})

    def _check_cell(self, key: Cell) -> None:
        if len(key) != len(self.variables):
            raise DomainError(f"cell {key} does not assign all {len(self.variables)} variables")
        for value, variable in zip(key, self.variables):
            if value not in variable.domain:
                raise DomainError(f"value '{value}' not in domain of '{variable.name}'")

    def domain(self, index: VariableId) -> Tuple[str, ...]:
        return self.variables[index].domain

    def cells(self) -> Iterator[Tuple[Cell, Fraction]]:
        """All cells of the full product space in domain order, zeros included"""
        for key in product(*(v.domain for v in self.variables)):
            yield key, self._cells.get(key, Fraction(0))

    def support(self) -> Dict[Cell, Fraction]:
        return dict(self._cells)

    def marginal_table(self, mask: VarSet) -> Dict[Cell, Fraction]:
        """Marginal over a VarSet, keyed by value tuples in member order"""
        cached = self._marginals.get(mask)
        if cached is not None:
            return cached

        positions = members(mask)
        table: Dict[Cell, Fraction] = {}
        for key, p in self._cells.items():
            sub = tuple(key[i] for i in positions)
            table[sub] = table.get(sub, Fraction(0)) + p
        self._marginals[mask] = table
        return table

    def probability(self, assignment: Assignment) -> Fraction:
        """P(assignment) for a partial assignment"""
        self.check_assignment(assignment)
        mask = 0
        for index in assignment:
            mask |= 1 << index
        key = tuple(assignment[i] for i in members(mask))
        return self.marginal_table(mask).get(key, Fraction(0))

    def check_assignment(self, assignment: Assignment, mask: Optional[VarSet] = None) -> None:
        for index, value in assignment.items():
            if not 0 <= index < len(self.variables):
                raise DomainError(f"variable index {index} outside the universe")
            if value not in self.variables[index].domain:
                raise DomainError(
                    f"value '{value}' not in domain of '{self.variables[index].name}'"
                )
        if mask is not None:
            assigned = 0
            for index in assignment:
                assigned |= 1 << index
            if assigned != mask:
                raise DomainError(
                    f"assignment covers {self.universe.format(assigned)}, "
                    f"expected {self.universe.format(mask)}"
                )

    def assignments(self, mask: VarSet) -> Iterator[Dict[VariableId, str]]:
        """Every value combination of a VarSet, in domain order"""
        positions = members(mask)
        for values in product(*(self.variables[i].domain for i in positions)):
            yield dict(zip(positions, values))

    def assignment(self, **values: str) -> Dict[VariableId, str]:
        """Assignment from variable names, e.g. p.assignment(c='0')"""
        result = {self.universe.index(name): str(value) for name, value in values.items()}
        self.check_assignment(result)
        return result

    @property
    def is_strictly_positive(self) -> bool:
        return all(p > 0 for _, p in self.cells())

    @property
    def is_binary(self) -> bool:
        return all(len(v.domain) == 2 for v in self.variables)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, TabularDistribution)
                and self.variables == other.variables
                and self._cells == other._cells)

    def __repr__(self) -> str:
        return f"TabularDistribution({list(self.universe.names)!r}, cells={len(self._cells)})"


def marginalize(p: TabularDistribution, s: VarSet) -> TabularDistribution:
    """Distribution over the variables of s (kept in universe order)"""
    if not p.universe.contains(s):
        raise DomainError(f"cannot marginalize onto variables outside {list(p.universe.names)}")
    if s == p.universe.full:
        return p

    variables = [p.variables[i] for i in members(s)]
    return TabularDistribution(variables, p.marginal_table(s))


def condition_on(p: TabularDistribution, e: Assignment) -> TabularDistribution:
    """
    Restrict to cells consistent with e and renormalize over the unassigned
    variables

    Raises:
        ZeroEvidenceError: when P(e) = 0
    """
    p.check_assignment(e)
    if not e:
        return p

    evidence = p.probability(e)
    if evidence == 0:
        rendered = ', '.join(f"{p.variables[i].name}={v}" for i, v in sorted(e.items()))
        raise ZeroEvidenceError("conditioning event has probability zero", evidence=rendered)

    assigned = set(e)
    remaining = [i for i in range(len(p.variables)) if i not in assigned]
    table: Dict[Cell, Fraction] = {}
    for key, prob in p.support().items():
        if all(key[i] == v for i, v in e.items()):
            sub = tuple(key[i] for i in remaining)
            table[sub] = table.get(sub, Fraction(0)) + prob / evidence

    return TabularDistribution([p.variables[i] for i in remaining], table)


def restrict_domain(p: TabularDistribution, index: VariableId,
                    values: Iterable[str]) -> TabularDistribution:
    """
    Condition on "variable takes one of values", keeping the variable with
    its domain shrunk to those values
    """
    keep = tuple(v for v in p.domain(index) if v in set(values))
    if not keep:
        raise DomainError(f"no listed value lies in the domain of '{p.variables[index].name}'")

    mass = sum((prob for key, prob in p.support().items() if key[index] in keep), Fraction(0))
    if mass == 0:
        raise ZeroEvidenceError(
            "restricted domain has probability zero",
            evidence=f"{p.variables[index].name} in {list(keep)}",
        )

    variables = list(p.variables)
    variables[index] = Variable(variables[index].name, keep)
    table = {key: prob / mass for key, prob in p.support().items() if key[index] in keep}
    return TabularDistribution(variables, table)


def _eq1_holds(p: TabularDistribution, x: VarSet, y: VarSet, z: VarSet,
               fixed: Optional[Assignment] = None) -> bool:
    """
    Cross-multiplied product rule P(XYZ)·P(Z) = P(XZ)·P(YZ), over every value
    combination (restricted to Z = fixed when given)
    """
    xyz = x | y | z
    joint = p.marginal_table(xyz)
    pxz = p.marginal_table(x | z)
    pyz = p.marginal_table(y | z)
    pz = p.marginal_table(z)

    order = members(xyz)
    pos = {v: i for i, v in enumerate(order)}
    xz_pos = [pos[v] for v in members(x | z)]
    yz_pos = [pos[v] for v in members(y | z)]
    z_pos = [pos[v] for v in members(z)]

    domains: List[Sequence[str]] = []
    for v in order:
        if fixed is not None and v in fixed:
            domains.append((fixed[v],))
        else:
            domains.append(p.domain(v))

    zero = Fraction(0)
    for key in product(*domains):
        lhs = joint.get(key, zero) * pz.get(tuple(key[i] for i in z_pos), zero)
        rhs = (pxz.get(tuple(key[i] for i in xz_pos), zero)
               * pyz.get(tuple(key[i] for i in yz_pos), zero))
        if lhs != rhs:
            return False
    return True


def tabular_independent(p: TabularDistribution, x: VarSet, y: VarSet, z: VarSet) -> bool:
    """
    Independence I(X, Y; Z), decided exactly by the product rule

    The cross-multiplied form holds vacuously wherever P(Z) = 0.
    """
    check_triplet(x, y, z, p.universe)
    if x == 0 or y == 0:
        return True
    return _eq1_holds(p, x, y, z)


def tabular_independent_at(p: TabularDistribution, x: VarSet, y: VarSet, z: VarSet,
                           z_values: Assignment) -> bool:
    """
    Value-level statement I(X, Y; Z = z): the product rule for all values of X and Y
    with Z fixed

    Raises:
        ZeroEvidenceError: when P(Z = z) = 0
    """
    check_triplet(x, y, z, p.universe)
    p.check_assignment(z_values, mask=z)
    if p.probability(z_values) == 0:
        rendered = ', '.join(f"{p.variables[i].name}={v}" for i, v in sorted(z_values.items()))
        raise ZeroEvidenceError("value-level statement is undefined", evidence=rendered)
    if x == 0 or y == 0:
        return True
    return _eq1_holds(p, x, y, z, fixed=z_values)


def holds_at_values(p: TabularDistribution, values: Assignment,
                    x: VarSet, y: VarSet, z: VarSet) -> bool:
    """
    Fully instantiated product rule at X = x, Y = y, Z = z

    Raises:
        ZeroEvidenceError: when P(Z = z) = 0
    """
    check_triplet(x, y, z, p.universe)
    p.check_assignment(values, mask=x | y | z)

    def sub(mask: VarSet) -> Dict[VariableId, str]:
        return {i: values[i] for i in members(mask)}

    pz = p.probability(sub(z))
    if pz == 0:
        rendered = ', '.join(f"{p.variables[i].name}={values[i]}" for i in members(z))
        raise ZeroEvidenceError("instantiated statement is undefined", evidence=rendered)
    if x == 0 or y == 0:
        return True
    return p.probability(values) * pz == p.probability(sub(x | z)) * p.probability(sub(y | z))
