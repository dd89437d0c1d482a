"""
Configuration management for the weyl-gradings workbench.

This module provides the ConfigManager class, which merges built-in defaults,
an optional JSON configuration file and environment variable overrides into a
validated settings model. Bounds on every enumeration, the z33 realizability
strategy and worker counts all live here.
"""

import json
import logging
import os
from pathlib import Path
from typing import Any, Dict, Optional, Union

from dotenv import load_dotenv
from pydantic import BaseModel, Field, ValidationError

from .exceptions import ConfigurationError

logger = logging.getLogger(__name__)

ENV_PREFIX = "WEYL"


class BoundsSettings(BaseModel):
    """Resource bounds for enumerations and constructions."""

    automorphism_group_order: int = Field(default=243, ge=1)
    bicharacter_group_order: int = Field(default=256, ge=1)
    pauli_degree: int = Field(default=12, ge=1)
    matrix_degree: int = Field(default=8, ge=1)
    closure_elements: int = Field(default=1_000_000, ge=1)
    upper_bound_candidates: int = Field(default=2_000_000, ge=1)


class WeylSettings(BaseModel):
    """Weyl pipeline strategy switches."""

    z33_mode: str = "full"
    z25_exhaustive: bool = False
    jobs: int = Field(default=1, ge=1)
    sample_seed: int = 1729


class AlgebraSettings(BaseModel):
    """Sampling parameters for eager algebra checks."""

    composition_samples: int = Field(default=50, ge=0)
    random_seed: int = 20240229


class LoggingSettings(BaseModel):
    """Logging configuration used by the command line."""

    level: str = "INFO"


class WorkspaceSettings(BaseModel):
    """On-disk workspace location."""

    directory: str = "weyl_workspace"


class WorkbenchSettings(BaseModel):
    """All workbench settings, grouped by section."""

    bounds: BoundsSettings = Field(default_factory=BoundsSettings)
    weyl: WeylSettings = Field(default_factory=WeylSettings)
    algebras: AlgebraSettings = Field(default_factory=AlgebraSettings)
    logging: LoggingSettings = Field(default_factory=LoggingSettings)
    workspace: WorkspaceSettings = Field(default_factory=WorkspaceSettings)


class ConfigManager:
    """
    Configuration manager for the workbench.

    Values come from three layers, later layers winning:

    | Layer        | Example                                   |
    |--------------|-------------------------------------------|
    | defaults     | ``WorkbenchSettings()``                   |
    | JSON file    | ``{"weyl": {"jobs": 4}}``                 |
    | environment  | ``WEYL_WEYL_JOBS=4`` (``.env`` supported) |

    Examples:
        >>> config_mgr = ConfigManager()
        >>> settings = config_mgr.get_settings()
        >>> settings.bounds.closure_elements
        1000000
        >>> config_mgr.get('weyl', 'z33_mode')
        'full'
    """

    _env_loaded: bool = False

    def __init__(self, config_path: Optional[Union[str, Path]] = None) -> None:
        """
        Initialize the ConfigManager.

        Args:
            config_path: Optional JSON file with ``{section: {key: value}}`` overrides
        """
        self._config_path = Path(config_path) if config_path is not None else None
        self._settings_cache: Optional[WorkbenchSettings] = None

        if not ConfigManager._env_loaded:
            load_dotenv()
            ConfigManager._env_loaded = True
            logger.debug("Environment variables loaded")

        logger.debug(f"Initialized ConfigManager (file: {self._config_path})")

    def get_settings(self) -> WorkbenchSettings:
        """
        Get the validated settings, loading them on first use.

        Returns:
            WorkbenchSettings model

        Raises:
            ConfigurationError: If the merged configuration does not validate
        """
        if self._settings_cache is None:
            self.refresh()
        assert self._settings_cache is not None
        return self._settings_cache

    def get_config(self) -> Dict[str, Dict[str, Any]]:
        """
        Get the settings as a nested dictionary.

        Returns:
            Nested dictionary of configuration values
        """
        return self.get_settings().model_dump()

    def refresh(self) -> None:
        """
        Reload configuration from defaults, file and environment.

        Raises:
            ConfigurationError: If configuration cannot be loaded or validated
        """
        config = WorkbenchSettings().model_dump()

        if self._config_path is not None:
            config = self._merge(config, self._read_file(self._config_path))

        config = self._apply_env_overrides(config)

        try:
            self._settings_cache = WorkbenchSettings.model_validate(config)
        except ValidationError as e:
            logger.error(f"Invalid configuration: {str(e)}")
            raise ConfigurationError(f"Invalid configuration: {str(e)}") from e

        logger.info(f"Configuration loaded ({len(config)} sections)")

    def get(self, section: str, key: str, default: Any = None) -> Any:
        """
        Get a specific configuration value.

        Args:
            section: Configuration section name
            key: Configuration key name
            default: Default value if not found

        Returns:
            Configuration value or default

        Examples:
            >>> config_mgr.get('bounds', 'pauli_degree')
            12
        """
        config = self.get_config()
        return config.get(section, {}).get(key, default)

    def clear_cache(self) -> None:
        """Clear the settings cache."""
        self._settings_cache = None
        logger.debug("Configuration cache cleared")

    def _read_file(self, path: Path) -> Dict[str, Dict[str, Any]]:
        """
        Read a JSON configuration file.

        Args:
            path: File path

        Returns:
            Nested dictionary with sections and keys

        Raises:
            ConfigurationError: If the file is unreadable or malformed
        """
        try:
            data = json.loads(path.read_text())
        except (OSError, ValueError) as e:
            raise ConfigurationError(f"Failed to read configuration file {path}: {str(e)}") from e

        if not isinstance(data, dict) or not all(isinstance(v, dict) for v in data.values()):
            raise ConfigurationError(f"Configuration file {path} must map sections to objects")
        return data

    def _merge(
        self, base: Dict[str, Dict[str, Any]], overrides: Dict[str, Dict[str, Any]]
    ) -> Dict[str, Dict[str, Any]]:
        """
        Merge section dictionaries, override values winning.

        Args:
            base: Base configuration
            overrides: Values to apply on top

        Returns:
            Merged configuration
        """
        merged = {section: dict(values) for section, values in base.items()}
        for section, values in overrides.items():
            if section not in merged:
                logger.warning(f"Ignoring unknown configuration section: {section}")
                continue
            for key, value in values.items():
                merged[section][key] = self._convert_value(value)
        return merged

    def _convert_value(self, value: Any) -> Any:
        """
        Convert string values to appropriate types.

        Attempts to convert to boolean, int or float.
        Returns original string if conversion fails.

        Args:
            value: Value to convert

        Returns:
            Converted value
        """
        if not isinstance(value, str):
            return value

        value_lower = value.lower()
        if value_lower in ("true", "yes"):
            return True
        if value_lower in ("false", "no"):
            return False

        try:
            return int(value)
        except ValueError:
            pass

        try:
            return float(value)
        except ValueError:
            pass

        return value

    def _apply_env_overrides(
        self, config: Dict[str, Dict[str, Any]]
    ) -> Dict[str, Dict[str, Any]]:
        """
        Apply environment variable overrides.

        Environment variables in format WEYL_SECTION_KEY override
        corresponding config values.

        Args:
            config: Configuration dictionary

        Returns:
            Configuration with environment overrides applied
        """
        for section in config:
            for key in config[section]:
                env_var = f"{ENV_PREFIX}_{section.upper()}_{key.upper()}"
                env_value = os.getenv(env_var)

                if env_value is not None:
                    config[section][key] = self._convert_value(env_value)
                    logger.debug(f"Applied env override: {env_var}")

        return config


_config_manager: Optional[ConfigManager] = None


def get_settings() -> WorkbenchSettings:
    """
    Convenience accessor for the process-wide settings.

    Returns:
        WorkbenchSettings model

    Examples:
        >>> from weyl_gradings.config import get_settings
        >>> get_settings().weyl.jobs
        1
    """
    global _config_manager
    if _config_manager is None:
        _config_manager = ConfigManager()
    return _config_manager.get_settings()


def configure(config_path: Optional[Union[str, Path]] = None) -> ConfigManager:
    """
    Replace the process-wide configuration manager.

    Args:
        config_path: Optional JSON configuration file

    Returns:
        The new ConfigManager
    """
    global _config_manager
    _config_manager = ConfigManager(config_path)
    return _config_manager
