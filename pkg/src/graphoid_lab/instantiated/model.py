"""
Instantiated dependency models

Triplets carry specific values for their variables. A tabular backing
answers with the product rule at those values; a Gaussian backing answers
with set-level independence, since conditioning values never enter the
conditional covariance.
"""

from dataclasses import dataclass, field
from itertools import product
from typing import Dict, Iterator, List, Mapping, Optional, Tuple, Union

import numpy as np

from ..distributions.gaussian import GaussianModel, gaussian_conditional, gaussian_independent
from ..distributions.oracles import canonical_triplets
from ..distributions.tabular import (
    TabularDistribution,
    condition_on,
    holds_at_values,
    tabular_independent,
    tabular_independent_at,
)
from ..graphoid.model import DependencyModel, is_closed
from ..graphoid.triplet import Triplet, check_triplet
from ..graphoid.universe import Universe, VariableId, VarSet, bit, members
from ..utils.exceptions import CapacityError, DomainError, InputError, ZeroEvidenceError
from ..utils.logging import get_logger, log_performance

logger = get_logger(__name__)

DEFAULT_INDUCED_MAX_VARIABLES = 6

Backing = Union[TabularDistribution, GaussianModel]
Value = Union[str, float]


@dataclass(frozen=True)
class InstantiatedTriplet:
    """(X = x, Y = y; Z = z): three disjoint VarSets and one value per member"""
    x: VarSet
    y: VarSet
    z: VarSet
    values: Mapping[VariableId, Value] = field(default_factory=dict)

    @classmethod
    def from_names(cls, universe: Universe, x: Mapping[str, Value], y: Mapping[str, Value],
                   z: Optional[Mapping[str, Value]] = None) -> 'InstantiatedTriplet':
        z = z or {}
        values: Dict[VariableId, Value] = {}
        for part in (x, y, z):
            for name, value in part.items():
                values[universe.index(name)] = value
        return cls(universe.varset(x), universe.varset(y), universe.varset(z), values)

    @property
    def triplet(self) -> Triplet:
        return Triplet(self.x, self.y, self.z)

    def values_for(self, mask: VarSet) -> Dict[VariableId, Value]:
        return {i: self.values[i] for i in members(mask)}

    def render(self, universe: Universe) -> str:
        def part(mask: VarSet) -> str:
            return ','.join(f"{universe.names[i]}={self.values[i]}" for i in members(mask))
        return f"I({part(self.x)}; {part(self.y)} | {part(self.z)})"


class InstantiatedModel:
    """Value-level independence oracle over a tabular or Gaussian backing"""

    def __init__(self, backing: Backing):
        if not isinstance(backing, (TabularDistribution, GaussianModel)):
            raise TypeError(f"unsupported backing {type(backing).__name__}")
        self.backing = backing
        self.universe: Universe = backing.universe

    @property
    def is_gaussian(self) -> bool:
        return isinstance(self.backing, GaussianModel)

    def _check(self, t: InstantiatedTriplet) -> None:
        check_triplet(t.x, t.y, t.z, self.universe)
        covered = 0
        for index in t.values:
            covered |= bit(index)
        if covered != t.x | t.y | t.z:
            raise InputError(
                f"values cover {self.universe.format(covered)}, "
                f"expected {self.universe.format(t.x | t.y | t.z)}",
                field="values",
            )
        if self.is_gaussian:
            for index, value in t.values.items():
                if not np.isfinite(float(value)):
                    raise DomainError(f"value {value!r} of '{self.universe.names[index]}' is not finite")

    def query(self, t: InstantiatedTriplet) -> bool:
        """
        Is X = x independent of Y = y given Z = z

        Raises:
            ZeroEvidenceError: tabular backing with P(Z = z) = 0
        """
        self._check(t)
        if self.is_gaussian:
            return gaussian_independent(self.backing, t.x, t.y, t.z)
        return holds_at_values(self.backing, t.values, t.x, t.y, t.z)

    def independent_at(self, x: VarSet, y: VarSet, z: VarSet,
                       z_values: Mapping[VariableId, Value]) -> bool:
        """X and Y independent given Z fixed at z_values, for all values of X and Y"""
        if self.is_gaussian:
            check_triplet(x, y, z, self.universe)
            return gaussian_independent(self.backing, x, y, z)
        return tabular_independent_at(self.backing, x, y, z, z_values)

    def independent(self, x: VarSet, y: VarSet, z: VarSet) -> bool:
        """Set-level statement, so the model also serves as an IndependenceOracle"""
        if self.is_gaussian:
            return gaussian_independent(self.backing, x, y, z)
        return tabular_independent(self.backing, x, y, z)

    def values_of(self, index: VariableId) -> Tuple[Value, ...]:
        """Domain of a tabular variable; Gaussian variables have no finite domain"""
        if self.is_gaussian:
            raise DomainError(f"'{self.universe.names[index]}' is continuous")
        return self.backing.domain(index)

    def instances(self, x: VarSet, y: VarSet, z: VarSet) -> Iterator[InstantiatedTriplet]:
        """Every value combination of a tabular triplet"""
        indices = members(x | y | z)
        for combo in product(*(self.values_of(i) for i in indices)):
            yield InstantiatedTriplet(x, y, z, dict(zip(indices, combo)))

    def __repr__(self) -> str:
        return f"InstantiatedModel({self.backing!r})"


def _drop(universe: Universe, mask: VarSet, u: VariableId) -> VarSet:
    """Re-index a VarSet of the universe after removing variable u"""
    result = 0
    for i in members(mask):
        if i == u:
            raise InputError(f"'{universe.names[u]}' was conditioned away")
        result |= bit(i if i < u else i - 1)
    return result


def conditional_model(m: InstantiatedModel, u: VariableId, value: Value) -> InstantiatedModel:
    """
    Model over the universe without u, holding (X, Y; Z) iff m holds
    (X, Y; Z ∪ {u = value})

    Raises:
        ZeroEvidenceError: tabular backing with P(u = value) = 0
    """
    if not 0 <= u < m.universe.size:
        raise InputError(f"variable index {u} outside the universe")
    if m.universe.size == 1:
        raise InputError("cannot condition away the only variable")

    if m.is_gaussian:
        return InstantiatedModel(gaussian_conditional(m.backing, bit(u), [float(value)]))
    return InstantiatedModel(condition_on(m.backing, {u: str(value)}))


@dataclass(frozen=True)
class CoherenceCheck:
    """Agreement between a conditional model and the original with u added to Z"""
    coherent: bool
    checked: int
    mismatch: Optional[str] = None

    def __bool__(self) -> bool:
        return self.coherent


def check_conditional_coherence(m: InstantiatedModel, u: VariableId, value: Value) -> CoherenceCheck:
    """Compare every instantiated query of the conditional model with m (tabular backings)"""
    conditional = conditional_model(m, u, value)
    universe = m.universe
    rest = universe.full & ~bit(u)

    checked = 0
    for t in canonical_triplets(rest):
        for inst in m.instances(t.x, t.y, t.z):
            full_values = dict(inst.values)
            full_values[u] = str(value)
            if m.backing.probability({i: full_values[i] for i in members(t.z | bit(u))}) == 0:
                continue

            original = m.query(InstantiatedTriplet(t.x, t.y, t.z | bit(u), full_values))
            reduced_values = {(i if i < u else i - 1): v for i, v in inst.values.items()}
            reduced = InstantiatedTriplet(
                _drop(universe, t.x, u), _drop(universe, t.y, u), _drop(universe, t.z, u), reduced_values
            )
            checked += 1
            if conditional.query(reduced) != original:
                return CoherenceCheck(False, checked, inst.render(universe))
    return CoherenceCheck(True, checked)


@log_performance
def induced_uninstantiated(m: InstantiatedModel,
                           max_variables: int = DEFAULT_INDUCED_MAX_VARIABLES) -> DependencyModel:
    """
    Set-level model: (X, Y; Z) is in iff every instantiation with positive
    conditioning mass is in m

    Raises:
        CapacityError: universe larger than max_variables
    """
    universe = m.universe
    if universe.size > max_variables:
        raise CapacityError(f"induced model over {universe.size} variables", limit=max_variables)

    statements: List[Triplet] = []
    for t in canonical_triplets(universe.full):
        if m.is_gaussian:
            if gaussian_independent(m.backing, t.x, t.y, t.z):
                statements.append(t)
            continue

        holds = True
        for inst in m.instances(t.x, t.y, t.z):
            try:
                if not m.query(inst):
                    holds = False
                    break
            except ZeroEvidenceError:
                continue
        if holds:
            statements.append(t)

    model = DependencyModel.from_statements(universe, statements)
    if is_closed(model):
        return DependencyModel(universe=universe, statements=model.statements, closed=True)
    logger.warning("Induced set-level model is not a graphoid")
    return model
