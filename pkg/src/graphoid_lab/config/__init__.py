"""
Configuration management for Graphoid Lab
"""

from .manager import ConfigManager
from .validator import ConfigValidator

__all__ = [
    "ConfigManager",
    "ConfigValidator",
]
