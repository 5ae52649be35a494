"""
Dependency models, triplets and graphoid closure
"""

from .universe import Universe, VarSet, VariableId, bit, members, subsets
from .triplet import Triplet, normalize
from .model import (
    ClosureCheck,
    DependencyModel,
    IndependenceOracle,
    close,
    holds,
    is_closed,
)

__all__ = [
    "Universe",
    "VarSet",
    "VariableId",
    "bit",
    "members",
    "subsets",
    "Triplet",
    "normalize",
    "ClosureCheck",
    "DependencyModel",
    "IndependenceOracle",
    "close",
    "holds",
    "is_closed",
]
