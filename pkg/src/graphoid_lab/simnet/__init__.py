"""
Similarity networks for Graphoid Lab
"""

from .similarity import (
    Discrimination,
    GlobalNetwork,
    LocalNetwork,
    SimilarityGraph,
    SimnetValidation,
    build_local,
    build_locals,
    check_query_equivalence,
    compose_global,
    discriminates,
    relevant_symptoms,
)

__all__ = [
    "Discrimination",
    "GlobalNetwork",
    "LocalNetwork",
    "SimilarityGraph",
    "SimnetValidation",
    "build_local",
    "build_locals",
    "check_query_equivalence",
    "compose_global",
    "discriminates",
    "relevant_symptoms",
]
