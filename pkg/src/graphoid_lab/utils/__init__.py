"""
Utility modules for Graphoid Lab
"""

from .exceptions import (
    GraphoidLabError,
    ConfigurationError,
    InvalidTripletError,
    CapacityError,
    DomainError,
    ZeroEvidenceError,
    RegularityError,
    ModelLoadError,
    InputError,
)
from .logging import setup_logging, get_logger

__all__ = [
    "GraphoidLabError",
    "ConfigurationError",
    "InvalidTripletError",
    "CapacityError",
    "DomainError",
    "ZeroEvidenceError",
    "RegularityError",
    "ModelLoadError",
    "InputError",
    "setup_logging",
    "get_logger",
]
