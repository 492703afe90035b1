#!/usr/bin/env python3
# Copyright © 2025 Sierra Labs LLC
# SPDX-License-Identifier: AGPL-3.0-only
# License-Filename: LICENSE

"""Tests for report writers and CLI output formatters."""

import shutil
import tempfile
from datetime import datetime
from pathlib import Path
import sys

import pytest

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from src.cli.formatters import (
    FormatNotSupportedError,
    OutputFormat,
    format_csv,
    format_json,
    format_latex,
    format_markdown,
    format_table,
    latex_escape,
    require_format,
)
from src.verify.markdown_writer import ReportMarkdownWriter
from src.verify.report import CheckStatus, VerificationReport


@pytest.fixture
def temp_dir():
    """Create temporary directory for testing."""
    path = tempfile.mkdtemp()
    yield Path(path)
    shutil.rmtree(path)


@pytest.fixture
def reports():
    return [
        VerificationReport("golden.rank2_z2", {"g": 2, "a": 1}, CheckStatus.PASS),
        VerificationReport(
            "golden.rank2_odd",
            {"g": 3, "c": 3},
            CheckStatus.FLAGGED,
            {"degree": None, "warnings": ["boundary"]},
            "negative_exponent_boundary",
        ),
        VerificationReport("groups.h1", {"r": 2, "a": 1, "b": 0}, CheckStatus.FAIL, {"degree": 1, "expected": 1, "actual": 2}),
    ]


# =============================================================================
# Markdown
# =============================================================================

class TestReportMarkdownWriter:
    def test_generate(self, reports):
        content = ReportMarkdownWriter().generate_markdown(reports, "golden", {}, datetime(2025, 1, 2, 3, 4, 5))
        assert content.startswith("# Verification Summary")
        assert "**Suite**: `golden`" in content
        assert "**Generated**: 2025-01-02T03:04:05" in content
        assert "pass: 1 | fail: 1 | flagged: 1" in content
        assert "### `negative_exponent_boundary`" in content
        assert "| `groups.h1` |" in content
        assert "## Metrics" not in content

    def test_no_failures(self, reports):
        content = ReportMarkdownWriter().generate_markdown(reports[:2], "golden", {}, datetime.now())
        assert "*No unexpected failures*" in content

    def test_metrics_table(self, reports):
        metrics = {
            "golden.rank2_z2": {
                "count": 1, "errors": 0, "checks": 12, "failed": 0, "flagged": 0,
                "avg_duration_ms": 1.5, "max_duration_ms": 2.0,
            }
        }
        content = ReportMarkdownWriter().generate_markdown(reports, "golden", metrics, datetime.now())
        assert "| `golden.rank2_z2` | 1 | 12 | 0 | 0 | 1.5 | 2.0 |" in content

    def test_write_explicit_path(self, reports, temp_dir):
        path = ReportMarkdownWriter().write_summary(reports, "golden", path=temp_dir / "out" / "summary.md")
        assert path.exists()
        assert "# Verification Summary" in path.read_text(encoding="utf-8")

    def test_write_timestamped(self, reports, temp_dir):
        writer = ReportMarkdownWriter(temp_dir)
        path = writer.write_summary(reports, "all", timestamp=datetime(2025, 6, 7, 8, 9, 10))
        assert path == temp_dir / "verify_all_20250607_080910.md"


# =============================================================================
# DuckDB
# =============================================================================

class TestVerificationDuckDBWriter:
    def test_write_and_read_runs(self, reports, temp_dir):
        pytest.importorskip("duckdb")
        from src.verify.duckdb_writer import VerificationDuckDBWriter

        db_path = temp_dir / "history.duckdb"
        with VerificationDuckDBWriter(db_path) as writer:
            first = writer.write_run("golden", reports, timestamp=datetime(2025, 1, 1, 0, 0, 0), version="0.1.0")
            second = writer.write_run("groups", reports[:1], timestamp=datetime(2025, 1, 2, 0, 0, 0))
            summaries = writer.run_summaries()
            golden_only = writer.run_summaries("golden")
            stored = writer._connection.execute(
                "SELECT count(*) FROM verification_reports WHERE run_id = ?", [first]
            ).fetchone()[0]

        assert db_path.exists()
        assert first.startswith("golden_20250101_000000_")
        assert [s["run_id"] for s in summaries] == [first, second]
        assert len(golden_only) == 1
        assert (golden_only[0]["total"], golden_only[0]["passed"], golden_only[0]["failed"], golden_only[0]["flagged"]) == (3, 1, 1, 1)
        assert stored == 3

    def test_schema_is_idempotent(self, temp_dir):
        pytest.importorskip("duckdb")
        from src.verify.duckdb_writer import VerificationDuckDBWriter

        db_path = temp_dir / "history.duckdb"
        for _ in range(2):
            writer = VerificationDuckDBWriter(db_path)
            writer.connect()
            writer.close()
        with VerificationDuckDBWriter(db_path) as writer:
            assert writer.run_summaries() == []


# =============================================================================
# Formatters
# =============================================================================

COLUMNS = ["g", "a", "pi1"]
ROWS = [{"g": 3, "a": 2, "pi1": "Z/2 ⋉ (Z/2 × Z)"}, {"g": 3, "a": 0, "pi1": "Z/2"}]


class TestFormatters:
    def test_csv(self):
        assert format_csv(COLUMNS, ROWS) == "g,a,pi1\n3,2,Z/2 ⋉ (Z/2 × Z)\n3,0,Z/2"

    def test_markdown(self):
        text = format_markdown(COLUMNS, ROWS, title="Groups")
        lines = text.split("\n")
        assert lines[0] == "## Groups"
        assert lines[2] == "| g | a | pi1 |"
        assert lines[4] == "| 3 | 2 | Z/2 ⋉ (Z/2 × Z) |"

    def test_latex(self):
        text = format_latex(COLUMNS, ROWS)
        assert text.startswith(r"\begin{tabular}{rrr}")
        assert text.endswith(r"\end{tabular}")
        assert r"Z/2 $\ltimes$ (Z/2 $\times$ Z) \\" in text

    def test_latex_escape(self):
        assert latex_escape("t^2_x") == r"t\^{}2\_x"
        assert latex_escape("50%") == r"50\%"

    def test_json_is_deterministic(self):
        assert format_json({"b": 1, "a": [1, 2]}) == '{\n  "a": [\n    1,\n    2\n  ],\n  "b": 1\n}'

    def test_table_dispatch(self):
        assert format_table(OutputFormat.TEXT, COLUMNS, ROWS) == format_markdown(COLUMNS, ROWS)
        assert format_table(OutputFormat.CSV, COLUMNS, ROWS) == format_csv(COLUMNS, ROWS)
        with pytest.raises(FormatNotSupportedError):
            format_table(OutputFormat.JSON, COLUMNS, ROWS)

    def test_require_format(self):
        require_format(OutputFormat.JSON, (OutputFormat.TEXT, OutputFormat.JSON), "distinguish")
        with pytest.raises(FormatNotSupportedError):
            require_format(OutputFormat.CSV, (OutputFormat.TEXT, OutputFormat.JSON), "distinguish")
