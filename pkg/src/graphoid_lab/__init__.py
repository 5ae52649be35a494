"""
Graphoid Lab

Graphoids, exact independence oracles, belief-network construction and
d-separation, and the three notions of unrelatedness between variables,
with seeded suites that check their equivalences.
"""

__version__ = "0.1.0"

# Package-level imports
from .config.manager import ConfigManager
from .graphoid.model import DependencyModel, IndependenceOracle, close, is_closed
from .graphoid.triplet import Triplet
from .graphoid.universe import Universe
from .utils.exceptions import (
    CapacityError,
    ConfigurationError,
    GraphoidLabError,
    InputError,
    ModelLoadError,
)

__all__ = [
    "ConfigManager",
    "DependencyModel",
    "IndependenceOracle",
    "Triplet",
    "Universe",
    "close",
    "is_closed",
    "CapacityError",
    "ConfigurationError",
    "GraphoidLabError",
    "InputError",
    "ModelLoadError",
]
