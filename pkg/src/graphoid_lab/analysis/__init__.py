"""
Unrelatedness analysis for Graphoid Lab
"""

from .unrelatedness import (
    ConnectednessCheck,
    Disconnection,
    ModelAnalysis,
    PairVerdict,
    SeparabilityCheck,
    TransitivityCheck,
    Uncoupling,
    analyze_model,
    component_unions,
    connectedness_matches_interaction,
    interact,
    interaction_matrix,
    is_separable,
    is_transitive,
    pair_verdict,
    totally_disconnected_pair,
    totally_independent_pair,
    totally_independent_sets,
    totally_uncoupled_pair,
    totally_uncoupled_sets,
)

__all__ = [
    "ConnectednessCheck",
    "Disconnection",
    "ModelAnalysis",
    "PairVerdict",
    "SeparabilityCheck",
    "TransitivityCheck",
    "Uncoupling",
    "analyze_model",
    "component_unions",
    "connectedness_matches_interaction",
    "interact",
    "interaction_matrix",
    "is_separable",
    "is_transitive",
    "pair_verdict",
    "totally_disconnected_pair",
    "totally_independent_pair",
    "totally_independent_sets",
    "totally_uncoupled_pair",
    "totally_uncoupled_sets",
]
