# Copyright © 2025 Sierra Labs LLC
# SPDX-License-Identifier: AGPL-3.0-only
# License-Filename: LICENSE

"""
Cross-validation of closed forms, golden tables, group invariants and the
dga oracle, plus the staged distinguishability engine.
"""

from .discrepancies import KNOWN_DISCREPANCIES, KnownDiscrepancy, lookup_discrepancy
from .distinguish import (
    DISTINGUISHED,
    INDISTINGUISHABLE,
    DistinguishHypothesisError,
    distinguish,
    parse_type_spec,
    type_from_spec,
)
from .duckdb_writer import DUCKDB_AVAILABLE, VerificationDuckDBWriter
from .golden import GoldenRow, GoldenTableError, load_golden_tables
from .markdown_writer import ReportMarkdownWriter
from .report import CheckStatus, VerificationReport, WitnessMissingError, sort_reports, summarize
from .suites import (
    SUITE_NAMES,
    UnknownSuiteError,
    golden_table_suite,
    run_group_suite,
    run_identity_suite,
    run_oracle_suite,
    run_suites,
)

__all__ = [
    "KNOWN_DISCREPANCIES",
    "KnownDiscrepancy",
    "lookup_discrepancy",
    "DISTINGUISHED",
    "INDISTINGUISHABLE",
    "DistinguishHypothesisError",
    "distinguish",
    "parse_type_spec",
    "type_from_spec",
    "DUCKDB_AVAILABLE",
    "VerificationDuckDBWriter",
    "GoldenRow",
    "GoldenTableError",
    "load_golden_tables",
    "ReportMarkdownWriter",
    "CheckStatus",
    "VerificationReport",
    "WitnessMissingError",
    "sort_reports",
    "summarize",
    "SUITE_NAMES",
    "UnknownSuiteError",
    "golden_table_suite",
    "run_group_suite",
    "run_identity_suite",
    "run_oracle_suite",
    "run_suites",
]
