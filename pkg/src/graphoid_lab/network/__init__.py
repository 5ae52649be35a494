"""
Belief networks, d-separation and DOT export
"""

from .belief import (
    BeliefNetwork,
    build,
    component_of,
    connected_components,
    minimal_parent_sets,
    minimal_parents,
    resolve_ordering,
)
from .dseparation import Trail, d_separated, enumerate_active_trails
from .dot import export_dot

__all__ = [
    "BeliefNetwork",
    "build",
    "component_of",
    "connected_components",
    "minimal_parent_sets",
    "minimal_parents",
    "resolve_ordering",
    "Trail",
    "d_separated",
    "enumerate_active_trails",
    "export_dot",
]
