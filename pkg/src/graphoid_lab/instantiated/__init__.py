"""
Instantiated dependency models and value-level axiom checks
"""

from .model import (
    CoherenceCheck,
    InstantiatedModel,
    InstantiatedTriplet,
    check_conditional_coherence,
    conditional_model,
    induced_uninstantiated,
)
from .axioms import (
    CellSplit,
    PropTransReport,
    UnificationReport,
    cell_splits,
    check_propositional_transitivity,
    check_propositional_transitivity_all,
    check_unification,
)

__all__ = [
    "CoherenceCheck",
    "InstantiatedModel",
    "InstantiatedTriplet",
    "check_conditional_coherence",
    "conditional_model",
    "induced_uninstantiated",
    "CellSplit",
    "PropTransReport",
    "UnificationReport",
    "cell_splits",
    "check_propositional_transitivity",
    "check_propositional_transitivity_all",
    "check_unification",
]
