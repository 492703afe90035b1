# Copyright © 2025 Sierra Labs LLC
# SPDX-License-Identifier: AGPL-3.0-only
# License-Filename: LICENSE

"""
Configuration management for moduli-betti.
Loads and validates configuration from YAML files.
"""

import logging
import os
from pathlib import Path
from typing import Any, Dict, Optional

import yaml

from .config_models import (
    ComputationConfig,
    DuckDBSinkFeatureConfig,
    FeaturesConfig,
    LoggingConfig,
    OracleConfig,
    PathsConfig,
    RotationConfig,
    VerifyConfig,
)

logger = logging.getLogger(__name__)

TRUNC_ENV_VAR = "MODULI_BETTI_TRUNC"


class Config:
    """
    Configuration manager for moduli-betti.

    Loads config.yaml from the first config directory found and provides
    typed access to every section. Missing keys fall back to the defaults in
    config_models.
    """

    def __init__(self, config_dir: Optional[Path] = None):
        """
        Initialize configuration.

        Args:
            config_dir: Path to configuration directory.
                       Defaults to checking multiple locations
        """
        if config_dir is None:
            possible_locations = [
                # 1. User's home directory
                Path.home() / ".moduli_betti",
                # 2. System-wide config
                Path("/etc/moduli_betti"),
            ]

            # Source checkouts win: walk up from this file looking for config/
            current = Path(__file__).parent
            while current != current.parent:
                config_candidate = current / "config"
                if config_candidate.exists():
                    possible_locations.insert(0, config_candidate)
                    break
                current = current.parent

            for location in possible_locations:
                if location.exists() and location.is_dir():
                    if list(location.glob("*.yaml")) or list(location.glob("*.yml")):
                        config_dir = location
                        break

            if config_dir is None:
                # Use default location even if it doesn't exist
                # (will use default values)
                config_dir = Path.home() / ".moduli_betti"

        self.config_dir = Path(config_dir)
        self._config: Dict[str, Any] = {}

        self._load_config()

    def _load_config(self) -> None:
        """Load config.yaml from the config directory, if present."""
        config_file = self.config_dir / "config.yaml"
        if config_file.exists():
            with open(config_file, "r") as f:
                self._config = yaml.safe_load(f) or {}
            logger.debug(f"Loaded configuration from {config_file}")
        else:
            self._config = {}

    def _expand_path(self, path_value: Any) -> Any:
        """Expand ~ in string or Path values; other values pass through."""
        if isinstance(path_value, str):
            return Path(path_value).expanduser()
        elif isinstance(path_value, Path):
            return path_value.expanduser()
        return path_value

    def get(self, key: str, default: Any = None, expand_path: bool = False) -> Any:
        """
        Get arbitrary configuration value using dot-separated path.

        Args:
            key: Dot-separated key path (e.g., "verify.r_max")
            default: Default value if key not found
            expand_path: If True, expand ~ in string paths to home directory

        Returns:
            Configuration value or default.
        """
        config: Any = self._config
        for part in key.split("."):
            if isinstance(config, dict):
                config = config.get(part)
                if config is None:
                    return default
            else:
                return default

        result = config if config is not None else default
        if expand_path and result is not None:
            result = self._expand_path(result)
        return result

    def get_path(self, key: str, default: Any = None) -> Path:
        """
        Get a path configuration value and expand ~ to home directory.

        Example:
            >>> config.get_path("paths.history_db")
            Path('/home/user/.moduli_betti/verification_history.duckdb')
        """
        value = self.get(key, default)
        if value is None:
            raise ValueError(f"Path configuration '{key}' not found and no default provided")
        return self._expand_path(value)

    # =========================================================================
    # Typed sections
    # =========================================================================

    @property
    def computation(self) -> ComputationConfig:
        """Computation defaults, with the truncation overridable from the environment."""
        defaults = ComputationConfig()
        truncation = self.get("computation.default_truncation", defaults.default_truncation)
        override = os.environ.get(TRUNC_ENV_VAR)
        if override is not None:
            try:
                truncation = int(override)
            except ValueError:
                raise ValueError(f"{TRUNC_ENV_VAR} must be a non-negative integer, got {override!r}")
            if truncation < 0:
                raise ValueError(f"{TRUNC_ENV_VAR} must be a non-negative integer, got {override!r}")
        return ComputationConfig(
            default_truncation=int(truncation),
            default_characteristic=str(self.get("computation.default_characteristic", defaults.default_characteristic)),
            basis_limit=int(self.get("computation.basis_limit", defaults.basis_limit)),
        )

    @property
    def oracle(self) -> OracleConfig:
        defaults = OracleConfig()
        return OracleConfig(
            internal_cap=int(self.get("oracle.internal_cap", defaults.internal_cap)),
            fields=[str(name) for name in self.get("oracle.fields", defaults.fields)],
        )

    @property
    def verify(self) -> VerifyConfig:
        defaults = VerifyConfig()
        return VerifyConfig(
            r_max=int(self.get("verify.r_max", defaults.r_max)),
            g_max=int(self.get("verify.g_max", defaults.g_max)),
            truncation=int(self.get("verify.truncation", defaults.truncation)),
            odd_genera=[int(g) for g in self.get("verify.odd_genera", defaults.odd_genera)],
            beta_ranks=[int(r) for r in self.get("verify.beta_ranks", defaults.beta_ranks)],
            beta_genus_max=int(self.get("verify.beta_genus_max", defaults.beta_genus_max)),
            rank3_genus_max=int(self.get("verify.rank3_genus_max", defaults.rank3_genus_max)),
            group_ranks=[int(r) for r in self.get("verify.group_ranks", defaults.group_ranks)],
            group_max_circles=int(self.get("verify.group_max_circles", defaults.group_max_circles)),
        )

    @property
    def paths(self) -> PathsConfig:
        defaults = PathsConfig()
        return PathsConfig(
            home=self.get_path("paths.home", defaults.home),
            reports_dir=self.get_path("paths.reports_dir", defaults.reports_dir),
            history_db=self.get_path("paths.history_db", defaults.history_db),
        )

    @property
    def logging(self) -> LoggingConfig:
        defaults = RotationConfig()
        return LoggingConfig(
            level=str(self.get("logging.level", LoggingConfig.level)),
            rotation=RotationConfig(
                max_bytes=int(self.get("logging.rotation.max_bytes", defaults.max_bytes)),
                backup_count=int(self.get("logging.rotation.backup_count", defaults.backup_count)),
            ),
        )

    @property
    def features(self) -> FeaturesConfig:
        return FeaturesConfig(
            duckdb_sink=DuckDBSinkFeatureConfig(
                enabled=bool(self.get("features.duckdb_sink.enabled", False)),
            )
        )
