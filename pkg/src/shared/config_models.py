# Copyright © 2025 Sierra Labs LLC
# SPDX-License-Identifier: AGPL-3.0-only
# License-Filename: LICENSE

"""
Configuration models for moduli-betti.
Provides strongly-typed dataclasses for all configuration sections.
"""

from dataclasses import dataclass, field
from pathlib import Path
from typing import List


# =============================================================================
# PATH CONFIGURATION
# =============================================================================

@dataclass
class PathsConfig:
    """All file and directory paths."""
    home: Path = field(default_factory=lambda: Path.home() / ".moduli_betti")
    reports_dir: Path = field(default_factory=lambda: Path.home() / ".moduli_betti" / "reports")
    history_db: Path = field(default_factory=lambda: Path.home() / ".moduli_betti" / "verification_history.duckdb")


# =============================================================================
# COMPUTATION CONFIGURATION
# =============================================================================

@dataclass
class ComputationConfig:
    """Defaults for series evaluation."""
    default_truncation: int = 40
    default_characteristic: str = "2"
    basis_limit: int = 1_000_000


@dataclass
class OracleConfig:
    """Differential graded algebra oracle settings."""
    internal_cap: int = 12
    fields: List[str] = field(default_factory=lambda: ["Q", "F3", "F5"])


# =============================================================================
# VERIFY CONFIGURATION
# =============================================================================

@dataclass
class VerifyConfig:
    """Bounds of the verification suites."""
    r_max: int = 5
    g_max: int = 6
    truncation: int = 40
    odd_genera: List[int] = field(default_factory=lambda: [3, 5, 7, 9])
    beta_ranks: List[int] = field(default_factory=lambda: [2, 4])
    beta_genus_max: int = 8
    rank3_genus_max: int = 4
    group_ranks: List[int] = field(default_factory=lambda: [2, 3])
    group_max_circles: int = 4


# =============================================================================
# LOGGING CONFIGURATION
# =============================================================================

@dataclass
class RotationConfig:
    """Log file rotation."""
    max_bytes: int = 10485760
    backup_count: int = 5


@dataclass
class LoggingConfig:
    """Logging configuration."""
    level: str = "WARNING"
    rotation: RotationConfig = field(default_factory=RotationConfig)


# =============================================================================
# FEATURES CONFIGURATION
# =============================================================================

@dataclass
class DuckDBSinkFeatureConfig:
    """DuckDB sink feature flag."""
    enabled: bool = False


@dataclass
class FeaturesConfig:
    """Feature flags."""
    duckdb_sink: DuckDBSinkFeatureConfig = field(default_factory=DuckDBSinkFeatureConfig)
