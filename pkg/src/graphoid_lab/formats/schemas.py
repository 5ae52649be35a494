"""
JSON schemas for Graphoid Lab interchange files
"""

from typing import Any, Dict

_NAME_LIST = {"type": "array", "items": {"type": "string", "minLength": 1}}

RATIONAL_PATTERN = r"^-?\d+(/\d+)?$"

DEPENDENCY_MODEL_SCHEMA: Dict[str, Any] = {
    "type": "object",
    "required": ["variables", "statements"],
    "properties": {
        "type": {"const": "model"},
        "variables": {**_NAME_LIST, "minItems": 1},
        "statements": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["X", "Y"],
                "properties": {
                    "X": _NAME_LIST,
                    "Y": _NAME_LIST,
                    "Z": _NAME_LIST,
                },
                "additionalProperties": False,
            },
        },
        "closed": {"type": "boolean"},
    },
}

TABULAR_SCHEMA: Dict[str, Any] = {
    "type": "object",
    "required": ["type", "variables", "cells"],
    "properties": {
        "type": {"const": "tabular"},
        "variables": {
            "type": "array",
            "minItems": 1,
            "items": {
                "type": "object",
                "required": ["name"],
                "properties": {
                    "name": {"type": "string", "minLength": 1},
                    "domain": {**_NAME_LIST, "minItems": 1},
                },
                "additionalProperties": False,
            },
        },
        "cells": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["assign", "p"],
                "properties": {
                    "assign": {"type": "object", "additionalProperties": {"type": "string"}},
                    "p": {
                        "oneOf": [
                            {"type": "string", "pattern": RATIONAL_PATTERN},
                            {"type": "integer", "minimum": 0},
                        ]
                    },
                },
                "additionalProperties": False,
            },
        },
    },
}

GAUSSIAN_SCHEMA: Dict[str, Any] = {
    "type": "object",
    "required": ["type", "variables", "mean", "covariance"],
    "properties": {
        "type": {"const": "gaussian"},
        "variables": {**_NAME_LIST, "minItems": 1},
        "mean": {"type": "array", "items": {"type": "number"}},
        "covariance": {
            "type": "array",
            "items": {"type": "array", "items": {"type": "number"}},
        },
        "tolerance": {"type": "number", "minimum": 0.0},
    },
}

NETWORK_SCHEMA: Dict[str, Any] = {
    "type": "object",
    "required": ["variables", "parents"],
    "properties": {
        "variables": {**_NAME_LIST, "minItems": 1},
        "ordering": _NAME_LIST,
        "parents": {"type": "object", "additionalProperties": _NAME_LIST},
        "edges": {"type": "array"},
    },
}

SIMILARITY_GRAPH_SCHEMA: Dict[str, Any] = {
    "type": "object",
    "required": ["hypothesis", "values", "edges"],
    "properties": {
        "hypothesis": {"type": "string", "minLength": 1},
        "values": {**_NAME_LIST, "minItems": 2},
        "edges": {
            "type": "array",
            "items": {"type": "array", "items": {"type": "string"}, "minItems": 2, "maxItems": 2},
        },
    },
}

SCHEMAS: Dict[str, Dict[str, Any]] = {
    "model": DEPENDENCY_MODEL_SCHEMA,
    "tabular": TABULAR_SCHEMA,
    "gaussian": GAUSSIAN_SCHEMA,
    "network": NETWORK_SCHEMA,
    "similarity": SIMILARITY_GRAPH_SCHEMA,
}
