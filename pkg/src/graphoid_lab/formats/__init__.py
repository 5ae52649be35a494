"""
Interchange formats for Graphoid Lab
"""

from .loader import (
    detect_kind,
    distribution_to_dict,
    dump_json,
    load_distribution,
    load_model,
    load_network,
    load_similarity_graph,
    load_source,
    model_to_dict,
    network_to_dict,
    parse_gaussian,
    parse_model,
    parse_network,
    parse_similarity_graph,
    parse_tabular,
    read_json,
    save_network,
)

__all__ = [
    "detect_kind",
    "distribution_to_dict",
    "dump_json",
    "load_distribution",
    "load_model",
    "load_network",
    "load_similarity_graph",
    "load_source",
    "model_to_dict",
    "network_to_dict",
    "parse_gaussian",
    "parse_model",
    "parse_network",
    "parse_similarity_graph",
    "parse_tabular",
    "read_json",
    "save_network",
]
