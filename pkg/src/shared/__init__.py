# Copyright © 2025 Sierra Labs LLC
# SPDX-License-Identifier: AGPL-3.0-only
# License-Filename: LICENSE

"""
Shared configuration, logging and metrics for moduli-betti.
"""

from .config import TRUNC_ENV_VAR, Config
from .logging_setup import setup_logging
from .metrics import FamilyStats, SuiteMetrics, get_metrics

__all__ = [
    "Config",
    "TRUNC_ENV_VAR",
    "setup_logging",
    "FamilyStats",
    "SuiteMetrics",
    "get_metrics",
]
