#!/usr/bin/env python3
# Copyright © 2025 Sierra Labs LLC
# SPDX-License-Identifier: AGPL-3.0-only
# License-Filename: LICENSE

"""Tests for verification reports, suites, golden tables and distinguishability."""

import shutil
import tempfile
from pathlib import Path
import sys

import pytest

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from src.algebra.series import RATIONALS, PoincarePolynomial, TruncatedSeries
from src.oracle.complexes import ComplexKind, ComplexParams
from src.shared.metrics import SuiteMetrics
from src.verify import suites
from src.verify.discrepancies import KNOWN_DISCREPANCIES, describe, lookup_discrepancy
from src.verify.distinguish import (
    DISTINGUISHED,
    INDISTINGUISHABLE,
    DistinguishHypothesisError,
    distinguish,
    parse_type_spec,
    type_from_spec,
)
from src.verify.golden import GoldenTableError, load_golden_tables
from src.verify.report import (
    CheckStatus,
    VerificationReport,
    WitnessMissingError,
    comparison_report,
    series_witness,
    sort_reports,
    summarize,
)


@pytest.fixture
def temp_dir():
    """Create temporary directory for testing."""
    path = tempfile.mkdtemp()
    yield Path(path)
    shutil.rmtree(path)


def by_status(reports, status):
    return [report for report in reports if report.status == status]


# =============================================================================
# Reports
# =============================================================================

class TestReports:
    def test_failure_needs_witness(self):
        with pytest.raises(WitnessMissingError):
            VerificationReport("x", {}, CheckStatus.FAIL)
        with pytest.raises(WitnessMissingError):
            VerificationReport("x", {}, CheckStatus.FLAGGED, {})

    def test_dict_round_trip(self):
        report = VerificationReport("x", {"g": 3}, "flagged", {"degree": 2}, "rank2_as_printed")
        assert report.status == CheckStatus.FLAGGED
        assert VerificationReport.from_dict(report.to_dict()) == report

    def test_series_witness(self):
        assert series_witness([1, 2, 3], [1, 2, 4]) == {"degree": 2, "expected": 3, "actual": 4}
        assert series_witness([1, 2, 3], [1, 2, 4], upto=1) is None
        assert series_witness([1, 2], [1, 2, 0]) is None

    def test_series_witness_encodes_coefficients(self):
        expected = PoincarePolynomial.from_integers([1, 1])
        actual = TruncatedSeries.from_coefficients(RATIONALS, [1, 2])
        assert series_witness(expected, actual) == {"degree": 1, "expected": 1, "actual": 2}

    def test_comparison_report_statuses(self):
        assert comparison_report("c", {}, [1, 2], [1, 2]).passed
        assert comparison_report("c", {}, [1, 2], [1, 3]).status == CheckStatus.FAIL
        flagged = comparison_report("c", {}, [1, 2], [1, 3], discrepancy="rank2_as_printed")
        assert flagged.status == CheckStatus.FLAGGED
        assert flagged.witness["degree"] == 1

    def test_sort_and_summarize(self):
        reports = [
            VerificationReport("b", {"g": 2}, CheckStatus.PASS),
            VerificationReport("a", {"g": 3}, CheckStatus.FAIL, {"degree": 0}),
            VerificationReport("a", {"g": 2}, CheckStatus.PASS),
        ]
        ordered = sort_reports(reports)
        assert [(r.check, r.params["g"]) for r in ordered] == [("a", 2), ("a", 3), ("b", 2)]
        assert summarize(reports) == {"pass": 2, "fail": 1, "flagged": 0}


class TestDiscrepancies:
    def test_lookup(self):
        assert lookup_discrepancy("golden.rank2_odd", {"g": 3, "c": 3}) == "negative_exponent_boundary"
        assert lookup_discrepancy("golden.rank2_odd", {"g": 3, "c": 2}) is None
        assert lookup_discrepancy("identity.beta_leading", {"eps": 1, "a": 2, "c": 0}) == "beta_table_connected_c0"
        assert lookup_discrepancy("identity.beta_leading", {"eps": 0, "a": 2, "c": 0}) is None

    def test_missing_params_do_not_match(self):
        assert lookup_discrepancy("golden.rank2_odd", {}) is None

    def test_describe(self):
        assert "g - a + 1" in describe("rank2_as_printed")
        with pytest.raises(KeyError):
            describe("no_such_key")


# =============================================================================
# Golden tables
# =============================================================================

class TestGoldenTables:
    def test_sections(self):
        tables = load_golden_tables()
        assert [len(tables[s]) for s in ("rank2_z2", "rank3_z2", "rank2_odd")] == [12, 3, 4]
        assert tables["rank2_z2"][6].params == {"g": 3, "a": 4}

    def test_missing_section(self, temp_dir):
        path = temp_dir / "golden.yaml"
        path.write_text("rank2_z2: []\nrank3_z2: []\n")
        with pytest.raises(GoldenTableError):
            load_golden_tables(path)

    def test_row_without_coeffs(self, temp_dir):
        path = temp_dir / "golden.yaml"
        path.write_text("rank2_z2:\n  - {g: 2, a: 1}\nrank3_z2: []\nrank2_odd: []\n")
        with pytest.raises(GoldenTableError):
            load_golden_tables(path)

    def test_suite(self):
        reports = suites.golden_table_suite(metrics=SuiteMetrics())
        assert by_status(reports, CheckStatus.FAIL) == []

        rank2 = [r for r in reports if r.check == "golden.rank2_z2"]
        assert len(rank2) == 12 and all(r.passed for r in rank2)
        rank3 = [r for r in reports if r.check == "golden.rank3_z2"]
        assert len(rank3) == 3 and all(r.passed for r in rank3)
        assert all(r.params["b"] == r.params["a"] - 1 for r in rank3)

        odd = {r.params["c"]: r for r in reports if r.check == "golden.rank2_odd"}
        assert all(odd[c].passed for c in (0, 1, 2))
        assert odd[3].status == CheckStatus.FLAGGED
        assert odd[3].discrepancy == "negative_exponent_boundary"

        b_equals_a = [r for r in reports if r.check == "golden.rank3_z2_b_equals_a"]
        assert all(r.status == CheckStatus.FLAGGED for r in b_equals_a)
        assert all(r.discrepancy == "rank3_b_equals_a" for r in b_equals_a)


# =============================================================================
# Suites
# =============================================================================

class TestSuites:
    def test_identity_suite(self):
        reports = suites.run_identity_suite(
            3, 3, 8, odd_genera=(3,), beta_ranks=(2,), beta_genus_max=3, rank3_genus_max=2, metrics=SuiteMetrics()
        )
        assert reports
        assert by_status(reports, CheckStatus.FAIL) == []
        for report in by_status(reports, CheckStatus.FLAGGED):
            assert report.discrepancy in KNOWN_DISCREPANCIES
            assert report.witness

    def test_identity_suite_rejects_small_bounds(self):
        with pytest.raises(ValueError):
            suites.run_identity_suite(1, 3, 8)

    def test_group_suite(self):
        metrics = SuiteMetrics()
        reports = suites.run_group_suite((2, 3), 3, metrics=metrics)
        assert reports and all(r.passed for r in reports)
        assert metrics.get_stats()["groups"]["count"] == 1

    def test_group_suite_needs_genus_three(self):
        with pytest.raises(ValueError):
            suites.run_group_suite((2,), 2, g=2)

    def test_oracle_suite(self, monkeypatch):
        monkeypatch.setattr(
            suites,
            "ORACLE_CASES",
            [
                (ComplexKind.KOSZUL_TATE, ComplexParams(r=2, n=1), ("odd",)),
                (ComplexKind.LEMMA314_S, ComplexParams(r=2, n=2, a=2, b=1), ("odd",)),
            ],
        )
        monkeypatch.setattr(
            suites,
            "NEGATIVE_CONTROLS",
            [(ComplexKind.KOSZUL_TATE, ComplexParams(r=2, n=1), "Q", "z_2")],
        )
        reports = suites.run_oracle_suite(("Q", "F2"), internal_cap=9, metrics=SuiteMetrics())
        checks = sorted(r.check for r in reports)
        assert checks == ["oracle.koszul_tate", "oracle.lemma314_S", "oracle.negative_control"]
        assert all(r.passed for r in reports)

    def test_unknown_suite(self):
        with pytest.raises(suites.UnknownSuiteError):
            suites.run_suites("everything")


# =============================================================================
# Distinguishability
# =============================================================================

class TestDistinguish:
    def test_parse_type_spec(self):
        assert parse_type_spec("6, 3, 1, 2") == (6, 3, 1, 2)
        with pytest.raises(DistinguishHypothesisError):
            parse_type_spec("6,3")
        with pytest.raises(DistinguishHypothesisError):
            parse_type_spec("a,b,c,d")

    def test_beta_stage(self):
        first = type_from_spec(2, 6, 3, 1, 2)
        second = type_from_spec(2, 6, 3, 1, 0)
        report = distinguish(first, second, 10)
        assert report.details["verdict"] == DISTINGUISHED
        assert report.witness == {"stage": "beta", "degree": 3, "values": [7, 5]}

    def test_connected_versus_disconnected(self):
        report = distinguish(type_from_spec(2, 6, 1, 1, 0), type_from_spec(2, 6, 1, 0, 0), 10)
        assert report.witness == {"stage": "beta", "degree": 3, "values": [5, 6]}

    def test_symmetric(self):
        first = type_from_spec(2, 6, 3, 1, 2)
        second = type_from_spec(2, 6, 3, 1, 0)
        forward = distinguish(first, second, 10).witness
        backward = distinguish(second, first, 10).witness
        assert forward["stage"] == backward["stage"]
        assert forward["values"] == list(reversed(backward["values"]))

    def test_genus_and_circle_stages(self):
        genus = distinguish(type_from_spec(2, 5, 1, 1, 0), type_from_spec(2, 6, 1, 1, 0), 10)
        assert genus.witness == {"stage": "genus", "degree": None, "values": [12, 15]}
        circles = distinguish(type_from_spec(2, 6, 3, 1, 0), type_from_spec(2, 6, 1, 1, 0), 10)
        assert circles.witness == {"stage": "circles", "degree": 1, "values": [3, 1]}

    def test_identical_types(self):
        top = type_from_spec(2, 6, 3, 1, 2)
        report = distinguish(top, top, 10)
        assert report.details["verdict"] == INDISTINGUISHABLE
        assert report.witness is None

    def test_odd_rank_skips_beta(self):
        report = distinguish(type_from_spec(3, 3, 2, 1, 0), type_from_spec(3, 3, 2, 1, 1), 10)
        assert report.details["verdict"] == INDISTINGUISHABLE
        assert report.details["stages"] == ["genus", "circles", "series"]

    def test_even_rank_needs_odd_circles(self):
        with pytest.raises(DistinguishHypothesisError):
            type_from_spec(2, 6, 2, 1, 2)

    def test_ranks_must_match(self):
        with pytest.raises(DistinguishHypothesisError):
            distinguish(type_from_spec(2, 6, 3, 1, 0), type_from_spec(3, 6, 3, 1, 0), 10)
