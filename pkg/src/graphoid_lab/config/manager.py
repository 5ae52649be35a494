"""
Configuration manager for Graphoid Lab
"""

import os
from copy import deepcopy
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Union

import yaml

from ..utils.exceptions import ConfigurationError
from ..utils.logging import get_logger
from .validator import ConfigValidator

logger = get_logger(__name__)

ENV_PREFIX = 'GRAPHOID_LAB_'
DEFAULT_CONFIG_PATH = Path(__file__).parent / 'default.yaml'


class ConfigManager:
    """
    Manages hierarchical configuration loading and access

    Configuration is loaded in the following order (later configs override earlier ones):
    1. Default configuration (package default.yaml)
    2. Global user configuration (~/.graphoid-lab/config.yaml)
    3. Project configuration (.graphoid-lab.yaml in the working directory,
       or the explicit path given on the command line)
    4. Environment variables (GRAPHOID_LAB_<SECTION>_<KEY>)
    """

    def __init__(self, config_path: Optional[Union[str, Path]] = None,
                 project_root: Optional[Path] = None,
                 overrides: Optional[Dict[str, Any]] = None):
        """
        Initialize configuration manager

        Args:
            config_path: Explicit configuration file replacing the project file
            project_root: Directory searched for .graphoid-lab.yaml
            overrides: Dot-notation values applied last (e.g. from CLI flags)
        """
        self.config_path = Path(config_path) if config_path else None
        self.project_root = project_root or Path.cwd()
        self.overrides = dict(overrides or {})
        self.validator = ConfigValidator()
        self._config: Dict[str, Any] = {}
        self._loaded = False

        self.reload()

    def reload(self) -> None:
        """Reload configuration from all sources"""
        logger.debug("Reloading configuration")

        self._config = self._load_yaml_file(DEFAULT_CONFIG_PATH)
        self._merge_config(self._load_global_config())

        if self.config_path is not None:
            if not self.config_path.exists():
                raise ConfigurationError(f"Configuration file not found: {self.config_path}")
            self._merge_config(self._load_yaml_file(self.config_path))
        else:
            self._merge_config(self._load_project_config())

        self._apply_env_overrides()
        for key, value in self.overrides.items():
            self.set(key, value)

        self._validate_config()

        self._loaded = True
        logger.debug("Configuration loaded successfully")

    def get(self, key: str, default: Any = None) -> Any:
        """
        Get configuration value using dot notation

        Args:
            key: Configuration key (e.g., 'limits.trail_cap')
            default: Default value if key not found

        Returns:
            Configuration value
        """
        if not self._loaded:
            self.reload()

        value = self._config
        try:
            for k in key.split('.'):
                value = value[k]
            return value
        except (KeyError, TypeError):
            return default

    def set(self, key: str, value: Any) -> None:
        """
        Set configuration value using dot notation

        Args:
            key: Configuration key (e.g., 'numerics.gaussian_tolerance')
            value: Value to set
        """
        keys = key.split('.')
        config = self._config

        for k in keys[:-1]:
            if k not in config:
                config[k] = {}
            config = config[k]

        config[keys[-1]] = value

    def validate(self) -> Tuple[bool, List[str]]:
        """
        Validate current configuration

        Returns:
            Tuple of (is_valid, error_messages)
        """
        return self.validator.validate(self._config)

    def to_dict(self) -> Dict[str, Any]:
        """Get configuration as dictionary"""
        return deepcopy(self._config)

    def _load_global_config(self) -> Dict[str, Any]:
        """Load global user configuration"""
        return self._load_yaml_file(Path.home() / '.graphoid-lab' / 'config.yaml')

    def _load_project_config(self) -> Dict[str, Any]:
        """Load project-specific configuration"""
        return self._load_yaml_file(self.project_root / '.graphoid-lab.yaml')

    def _load_yaml_file(self, path: Path) -> Dict[str, Any]:
        """Load YAML configuration file"""
        if not path.exists():
            logger.debug(f"Configuration file not found: {path}")
            return {}

        try:
            with open(path, 'r', encoding='utf-8') as f:
                config = yaml.safe_load(f) or {}
            logger.debug(f"Loaded configuration from {path}")
        except yaml.YAMLError as e:
            raise ConfigurationError(f"Invalid YAML in {path}: {e}")
        except OSError as e:
            raise ConfigurationError(f"Failed to load {path}: {e}")

        if not isinstance(config, dict):
            raise ConfigurationError(f"Top level of {path} must be a mapping")
        return config

    def _merge_config(self, new_config: Dict[str, Any]) -> None:
        """Merge new configuration into existing configuration"""
        if new_config:
            self._deep_merge(self._config, new_config)

    def _deep_merge(self, base: Dict[str, Any], update: Dict[str, Any]) -> None:
        """Deep merge two dictionaries"""
        for key, value in update.items():
            if key in base and isinstance(base[key], dict) and isinstance(value, dict):
                self._deep_merge(base[key], value)
            else:
                base[key] = value

    def _apply_env_overrides(self) -> None:
        """Apply environment variable overrides"""
        for env_key, env_value in os.environ.items():
            if not env_key.startswith(ENV_PREFIX):
                continue

            # Section names carry no underscores; keys may
            section, _, option = env_key[len(ENV_PREFIX):].lower().partition('_')
            if not option:
                logger.warning(f"Ignoring malformed environment override: {env_key}")
                continue

            config_key = f"{section}.{option}"
            parsed_value = self._parse_env_value(env_value)
            self.set(config_key, parsed_value)
            logger.debug(f"Applied environment override: {config_key} = {parsed_value}")

    def _parse_env_value(self, value: str) -> Union[str, int, float, bool, List[Any]]:
        """Parse environment variable value to appropriate type"""
        if value.lower() in ('true', 'yes', 'on'):
            return True
        elif value.lower() in ('false', 'no', 'off'):
            return False

        if ',' in value:
            return [self._parse_env_value(item.strip()) for item in value.split(',')]

        try:
            return int(value)
        except ValueError:
            pass
        try:
            return float(value)
        except ValueError:
            pass

        if value.lower() in ('null', 'none'):
            return None

        return value

    def _validate_config(self) -> None:
        """Validate the final configuration"""
        is_valid, errors = self.validate()
        if not is_valid:
            raise ConfigurationError(f"Configuration validation failed: {'; '.join(errors)}")
