"""
Configuration validator for Graphoid Lab
"""

import math
from typing import Any, Dict, List, Tuple

from jsonschema import ValidationError as JsonSchemaValidationError
from jsonschema import validate

from ..utils.logging import get_logger, parse_file_size

logger = get_logger(__name__)


class ConfigValidator:
    """Validates configuration against schema"""

    LOG_LEVELS = ['DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL']

    GENERATOR_SCHEMES = ['pcg64-v1']

    def __init__(self):
        """Initialize validator with schema"""
        self.schema = self._build_schema()

    def validate(self, config: Dict[str, Any]) -> Tuple[bool, List[str]]:
        """
        Validate configuration

        Args:
            config: Configuration dictionary to validate

        Returns:
            Tuple of (is_valid, error_messages)
        """
        errors = []

        try:
            validate(instance=config, schema=self.schema)

            errors.extend(self._validate_limits_config(config.get('limits', {})))
            errors.extend(self._validate_numerics_config(config.get('numerics', {})))
            errors.extend(self._validate_logging_config(config.get('logging', {})))

        except JsonSchemaValidationError as e:
            location = '.'.join(str(p) for p in e.absolute_path)
            if location:
                errors.append(f"Schema validation error at {location}: {e.message}")
            else:
                errors.append(f"Schema validation error: {e.message}")

        return len(errors) == 0, errors

    def _build_schema(self) -> Dict[str, Any]:
        """Build JSON schema for configuration validation"""
        positive_int = {"type": "integer", "minimum": 1}
        return {
            "type": "object",
            "properties": {
                "limits": {
                    "type": "object",
                    "properties": {
                        "closure_max_variables": {"type": "integer", "minimum": 1, "maximum": 16},
                        "induced_max_variables": {"type": "integer", "minimum": 1, "maximum": 12},
                        "uncoupled_max_variables": {"type": "integer", "minimum": 2, "maximum": 24},
                        "trail_cap": positive_int,
                        "proptrans_max_variables": {"type": "integer", "minimum": 3, "maximum": 9},
                        "discrimination_max_variables": {"type": "integer", "minimum": 2, "maximum": 16},
                    },
                    "additionalProperties": False
                },
                "numerics": {
                    "type": "object",
                    "properties": {
                        "gaussian_tolerance": {"type": "number", "minimum": 0.0},
                        "unification_grid": {
                            "type": "array",
                            "items": {"type": "number"},
                            "minItems": 3,
                            "uniqueItems": True
                        },
                    },
                    "additionalProperties": False
                },
                "generators": {
                    "type": "object",
                    "properties": {
                        "scheme": {"type": "string", "enum": self.GENERATOR_SCHEMES},
                        "max_weight": positive_int,
                        "gaussian_epsilon": {"type": "number", "exclusiveMinimum": 0.0},
                        "sparse_zero_fraction": {"type": "number", "minimum": 0.0, "maximum": 0.9},
                    },
                    "additionalProperties": False
                },
                "experiments": {
                    "type": "object",
                    "properties": {
                        "parallel": {"type": "boolean"},
                        "max_workers": {"type": "integer", "minimum": 1, "maximum": 64},
                        "sampled_orderings": positive_int,
                        "full_ordering_max_variables": {"type": "integer", "minimum": 1, "maximum": 8},
                    },
                    "additionalProperties": False
                },
                "output": {
                    "type": "object",
                    "properties": {
                        "color": {"type": "boolean"},
                    },
                    "additionalProperties": False
                },
                "logging": {
                    "type": "object",
                    "properties": {
                        "level": {"type": "string", "enum": self.LOG_LEVELS},
                        "file": {"type": ["string", "null"]},
                        "max_file_size": {"type": "string"},
                        "backup_count": {"type": "integer", "minimum": 0},
                        "format": {"type": "string"},
                    },
                    "additionalProperties": False
                },
            },
            "additionalProperties": False
        }

    def _validate_limits_config(self, limits_config: Dict[str, Any]) -> List[str]:
        """Validate enumeration caps against each other"""
        errors = []

        closure_cap = limits_config.get('closure_max_variables', 10)
        induced_cap = limits_config.get('induced_max_variables', 6)
        if induced_cap > closure_cap:
            errors.append(
                f"induced_max_variables ({induced_cap}) cannot exceed "
                f"closure_max_variables ({closure_cap})"
            )

        return errors

    def _validate_numerics_config(self, numerics_config: Dict[str, Any]) -> List[str]:
        """Validate numeric settings"""
        errors = []

        grid = numerics_config.get('unification_grid', [])
        if not all(math.isfinite(value) for value in grid):
            errors.append(f"unification_grid values must be finite: {grid}")

        return errors

    def _validate_logging_config(self, logging_config: Dict[str, Any]) -> List[str]:
        """Validate Logging-specific configuration"""
        errors = []

        max_file_size = logging_config.get('max_file_size', '10MB')
        try:
            parse_file_size(max_file_size)
        except ValueError:
            errors.append(f"Invalid file size format: {max_file_size}")

        return errors
