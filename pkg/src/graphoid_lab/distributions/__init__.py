"""
Tabular and Gaussian distributions, their independence oracles and seeded generators
"""

from .tabular import (
    BINARY_DOMAIN,
    TabularDistribution,
    Variable,
    condition_on,
    holds_at_values,
    marginalize,
    restrict_domain,
    tabular_independent,
    tabular_independent_at,
)
from .gaussian import GaussianModel, gaussian_conditional, gaussian_independent
from .oracles import (
    CachedOracle,
    GaussianOracle,
    TabularOracle,
    canonical_triplets,
    induced_model,
    oracle_for,
)
from .generators import KINDS, NAMED_EXAMPLES, generate

__all__ = [
    "BINARY_DOMAIN",
    "TabularDistribution",
    "Variable",
    "condition_on",
    "holds_at_values",
    "marginalize",
    "restrict_domain",
    "tabular_independent",
    "tabular_independent_at",
    "GaussianModel",
    "gaussian_conditional",
    "gaussian_independent",
    "CachedOracle",
    "GaussianOracle",
    "TabularOracle",
    "canonical_triplets",
    "induced_model",
    "oracle_for",
    "KINDS",
    "NAMED_EXAMPLES",
    "generate",
]
