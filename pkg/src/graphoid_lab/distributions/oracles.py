"""
Independence oracles backed by distributions, and induced dependency models
"""

import threading
from typing import Dict, Iterator, Union

from ..graphoid.model import DependencyModel, IndependenceOracle, is_closed
from ..graphoid.triplet import Triplet, check_triplet, normalize
from ..graphoid.universe import VarSet, members, subsets
from ..utils.exceptions import CapacityError
from ..utils.logging import get_logger, log_performance
from .gaussian import GaussianModel, gaussian_independent
from .tabular import TabularDistribution, tabular_independent

logger = get_logger(__name__)

DEFAULT_INDUCED_MAX_VARIABLES = 6

Distribution = Union[TabularDistribution, GaussianModel]


class TabularOracle:
    """Exact product-rule independence of a tabular distribution"""

    def __init__(self, distribution: TabularDistribution):
        self.distribution = distribution
        self.universe = distribution.universe

    def independent(self, x: VarSet, y: VarSet, z: VarSet) -> bool:
        return tabular_independent(self.distribution, x, y, z)


class GaussianOracle:
    """Conditional-covariance independence of a regular Gaussian"""

    def __init__(self, model: GaussianModel):
        self.distribution = model
        self.universe = model.universe

    def independent(self, x: VarSet, y: VarSet, z: VarSet) -> bool:
        return gaussian_independent(self.distribution, x, y, z)


class CachedOracle:
    """Memoizes another oracle's answers by canonical triplet"""

    def __init__(self, oracle: IndependenceOracle):
        self.oracle = oracle
        self.universe = oracle.universe
        self._answers: Dict[Triplet, bool] = {}
        self._lock = threading.Lock()
        self.queries = 0

    def independent(self, x: VarSet, y: VarSet, z: VarSet) -> bool:
        check_triplet(x, y, z, self.universe)
        if x == 0 or y == 0:
            return True
        key = normalize(Triplet(x, y, z))
        with self._lock:
            cached = self._answers.get(key)
        if cached is not None:
            return cached

        answer = self.oracle.independent(key.x, key.y, key.z)
        with self._lock:
            self._answers[key] = answer
            self.queries += 1
        return answer


def oracle_for(source) -> IndependenceOracle:
    """
    Wrap a distribution in its oracle; dependency models and existing oracles
    pass through unchanged
    """
    if isinstance(source, TabularDistribution):
        return CachedOracle(TabularOracle(source))
    if isinstance(source, GaussianModel):
        return CachedOracle(GaussianOracle(source))
    if isinstance(source, IndependenceOracle):
        return source
    raise TypeError(f"cannot build an independence oracle from {type(source).__name__}")


def canonical_triplets(full: VarSet) -> Iterator[Triplet]:
    """Every canonical triplet with nonempty X and Y over the given VarSet"""
    for z in subsets(full):
        rest = members(full & ~z)
        # Each remaining variable goes to X, Y or neither
        for code in range(3 ** len(rest)):
            x = y = 0
            for v in rest:
                code, slot = divmod(code, 3)
                if slot == 1:
                    x |= 1 << v
                elif slot == 2:
                    y |= 1 << v
            if x and y and x < y:
                yield Triplet(x, y, z)


@log_performance
def induced_model(oracle: IndependenceOracle,
                  max_variables: int = DEFAULT_INDUCED_MAX_VARIABLES) -> DependencyModel:
    """
    Explicit dependency model of every triplet the oracle affirms

    Args:
        oracle: Independence oracle over universe U
        max_variables: Cap on |U| for the full enumeration

    Returns:
        DependencyModel, flagged closed when it passes is_closed
    """
    universe = oracle.universe
    if universe.size > max_variables:
        raise CapacityError(f"induced model over {universe.size} variables", limit=max_variables)

    statements = [t for t in canonical_triplets(universe.full)
                  if oracle.independent(t.x, t.y, t.z)]
    model = DependencyModel.from_statements(universe, statements)

    check = is_closed(model)
    if not check.closed:
        logger.warning(
            f"Induced model is not closed under the graphoid axioms ({check.axiom}); "
            f"missing {check.missing.render(universe) if check.missing else '?'}"
        )
        return model

    logger.debug(f"Induced model holds {len(model)} statements over {universe.size} variables")
    return DependencyModel(universe=universe, statements=model.statements, closed=True)
