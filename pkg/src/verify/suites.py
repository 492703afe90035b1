# Copyright © 2025 Sierra Labs LLC
# SPDX-License-Identifier: AGPL-3.0-only
# License-Filename: LICENSE

"""
Verification suites tying the closed forms, the golden tables, the group
invariants and the dga oracle together.

Every suite returns a list of VerificationReport sorted by check name and
parameters. Mismatches never raise; they become fail reports, or flagged
reports when a known discrepancy covers the parameters.
"""

import logging
from pathlib import Path
from typing import Any, Callable, Dict, Iterator, List, Optional, Sequence, Tuple

from ..algebra.series import (
    RATIONALS,
    CoefficientRing,
    TruncatedSeries,
    palindrome_check,
    series_from_product,
)
from ..moduli.betti import (
    Rank2Mode,
    bcg_odd,
    bcg_odd_character_route,
    bcg_z2,
    beta_from_gt,
    beta_leading,
    bg_z2,
    bg_z2_product_form,
    bsg_z2,
    fixed_det_rank2_odd,
    fixed_det_rank2_z2,
    fixed_det_rank3_z2,
    g_t,
)
from ..moduli.groups import (
    FGAbelianGroup,
    abelianize,
    h1_fixed_det_moduli,
    pi0_cgauge,
    pi1_fixed_det_moduli,
)
from ..moduli.topology import (
    RealBundleTopType,
    RealCurveType,
    bundle_from_counts,
    enumerate_curves,
    stable_range,
    validate_curve,
)
from ..oracle.complexes import ComplexKind, ComplexParams, build_standard_complex, expected_homology
from ..oracle.dga import (
    DEFAULT_BASIS_LIMIT,
    Comparison,
    OracleError,
    compare_hilbert,
    compare_series,
    homology_hilbert,
    with_differential,
)
from ..shared.config_models import OracleConfig, VerifyConfig
from ..shared.metrics import SuiteMetrics, get_metrics
from .discrepancies import lookup_discrepancy
from .golden import load_golden_tables
from .report import (
    CheckStatus,
    VerificationReport,
    comparison_report,
    series_payload,
    series_witness,
    sort_reports,
    summarize,
    value_report,
)

logger = logging.getLogger(__name__)

SUITE_NAMES = ("identities", "golden", "oracle", "groups")


class UnknownSuiteError(ValueError):
    """Requested suite name does not exist."""
    pass


# =============================================================================
# Helpers
# =============================================================================

def _family(metrics: SuiteMetrics, name: str, build: Callable[[], List[VerificationReport]]) -> List[VerificationReport]:
    """Run one check family, recording its duration and outcome counts."""
    with metrics.timed(name) as outcome:
        reports = build()
        counts = summarize(reports)
        outcome.update(checks=len(reports), failed=counts["fail"], flagged=counts["flagged"])
    logger.info(f"{name}: {len(reports)} checks, {'FAILURES' if counts['fail'] else 'ok'}")
    return reports


def _compare(
    check: str,
    params: Dict[str, Any],
    expected: Any,
    actual: Any,
    upto: Optional[int] = None,
    details: Optional[Dict[str, Any]] = None,
) -> VerificationReport:
    key = lookup_discrepancy(check, params) if series_witness(expected, actual, upto) else None
    return comparison_report(check, params, expected, actual, upto, key, details)


def _with_boundary(report: VerificationReport, warnings: Sequence[str]) -> VerificationReport:
    """Flag a passing report whose inputs carry warnings of a registered family."""
    if report.status != CheckStatus.PASS or not warnings:
        return report
    key = lookup_discrepancy(report.check, report.params)
    if key is None:
        return report
    witness = {"degree": None, "warnings": list(warnings)}
    return VerificationReport(report.check, report.params, CheckStatus.FLAGGED, witness, key, report.details)


def _series(factors: List[Tuple[int, int, int]], D: int) -> TruncatedSeries:
    return series_from_product(factors, RATIONALS, D)


def _bundles(curve: RealCurveType, r: int) -> Iterator[RealBundleTopType]:
    """One bundle for each number b of odd circles, with degree d = b."""
    for b in range(curve.a + 1):
        yield bundle_from_counts(curve, r, b, b)


def _curve_params(curve: RealCurveType, **extra: Any) -> Dict[str, Any]:
    params: Dict[str, Any] = curve.to_dict()
    params.update(extra)
    return params


# =============================================================================
# Identity suite
# =============================================================================

def _mod2_identities(r_max: int, g_max: int, D: int) -> Dict[str, List[VerificationReport]]:
    families: Dict[str, List[VerificationReport]] = {
        "identity.bcg_bsg": [],
        "identity.bcg_bg": [],
        "identity.bg_product_form": [],
    }
    one_minus_t = _series([(-1, 1, 1)], D)
    for r in range(2, r_max + 1):
        for g in range(2, g_max + 1):
            one_plus_t_g = _series([(1, 1, g)], D)
            for a in range(0, g + 2):
                params = {"r": r, "g": g, "a": a, "D": D}
                bcg = bcg_z2(r, g, a, D).series
                bg = bg_z2(r, g, a, D).series
                families["identity.bcg_bsg"].append(
                    _compare("identity.bcg_bsg", params, bsg_z2(r, g, a, D).series, bcg * one_minus_t)
                )
                families["identity.bcg_bg"].append(_compare("identity.bcg_bg", params, bg, bcg * one_plus_t_g))
                families["identity.bg_product_form"].append(
                    _compare("identity.bg_product_form", params, bg, bg_z2_product_form(r, g, a, D).series)
                )
    return families


def _odd_rank_independence(r_max: int, g_max: int, D: int) -> List[VerificationReport]:
    reports: List[VerificationReport] = []
    for r in range(3, r_max + 1, 2):
        for g in range(2, g_max + 1):
            reference: Optional[TruncatedSeries] = None
            for curve in enumerate_curves(g):
                for bundle in _bundles(curve, r):
                    series = bcg_odd(r, curve, bundle, D).series
                    if reference is None:
                        reference = series
                    params = _curve_params(curve, r=r, b=bundle.b, D=D)
                    reports.append(_compare("identity.odd_rank_independence", params, reference, series))
    return reports


def _rank2_odd_curves(g: int, c: int) -> List[RealCurveType]:
    """Curves on which the rank 2 odd characteristic formula applies for c even circles."""
    curves: List[RealCurveType] = []
    if c + 1 <= g:
        curves.append(validate_curve(g, c + 1, 1))
    if c % 2 == 1:
        curves.append(validate_curve(g, c + 1, 0))
    return curves


def _rank2_odd_vs_gt(odd_genera: Sequence[int]) -> List[VerificationReport]:
    reports: List[VerificationReport] = []
    for g in odd_genera:
        D = 3 * g - 3
        for c in range(0, g + 1):
            moduli = fixed_det_rank2_odd(g, c)
            for curve in _rank2_odd_curves(g, c):
                gt = g_t(2, curve, c, D)
                params = _curve_params(curve, c=c)
                report = _compare(
                    "identity.rank2_odd_vs_gt",
                    params,
                    moduli.series,
                    gt.series,
                    upto=D,
                    details={"case": gt.case_label},
                )
                reports.append(_with_boundary(report, moduli.warnings + gt.warnings))
    return reports


def _rank2_odd_structure(odd_genera: Sequence[int]) -> List[VerificationReport]:
    reports: List[VerificationReport] = []
    for g in odd_genera:
        dim = 3 * g - 3
        for c in range(0, g + 1):
            poly = fixed_det_rank2_odd(g, c).series
            params = {"g": g, "c": c, "dim": dim}
            details = {"polynomial": series_payload(poly)}
            witness: Optional[Dict[str, Any]] = None
            if poly.coefficient(0) != 1:
                witness = {"degree": 0, "property": "constant term", "expected": 1, "actual": str(poly.coefficient(0))}
            elif not palindrome_check(poly, dim):
                k = next(
                    (k for k in range(dim + 1) if poly.coefficient(k) != poly.coefficient(dim - k)),
                    poly.degree,
                )
                witness = {"degree": k, "property": "palindrome", "expected": str(poly.coefficient(dim - k)), "actual": str(poly.coefficient(k))}
            elif poly.evaluate(-1) != 0:
                witness = {"degree": None, "property": "value at t = -1", "expected": 0, "actual": str(poly.evaluate(-1))}
            if witness is None:
                reports.append(VerificationReport("identity.rank2_odd_structure", params, CheckStatus.PASS, details=details))
            else:
                logger.warning(f"identity.rank2_odd_structure {params}: {witness['property']} fails")
                reports.append(VerificationReport("identity.rank2_odd_structure", params, CheckStatus.FAIL, witness, None, details))
    return reports


def _stable_range_agreement(g_max: int, rank3_genus_max: int, odd_genera: Sequence[int]) -> List[VerificationReport]:
    """Moduli space series against bcg * (1 - t) through the stable range."""
    reports: List[VerificationReport] = []
    for g in range(2, g_max + 1):
        sr = stable_range(2, g)
        for a in range(1, g + 2):
            expected = bcg_z2(2, g, a, sr).series * _series([(-1, 1, 1)], sr)
            moduli = fixed_det_rank2_z2(g, a).series
            params = {"r": 2, "g": g, "a": a, "field": "F2", "stable_range": sr}
            reports.append(_compare("identity.stable_range", params, expected, moduli, upto=sr))
    for g in range(2, rank3_genus_max + 1):
        sr = stable_range(3, g)
        for a in range(1, g + 2):
            expected = bcg_z2(3, g, a, sr).series * _series([(-1, 1, 1)], sr)
            moduli = fixed_det_rank3_z2(g, a - 1, sr).series
            params = {"r": 3, "g": g, "a": a, "field": "F2", "stable_range": sr}
            reports.append(_compare("identity.stable_range", params, expected, moduli, upto=sr))
    for g in odd_genera:
        sr = stable_range(2, g)
        for c in range(0, g):
            curve = validate_curve(g, c + 1, 1)
            expected = bcg_odd(2, curve, bundle_from_counts(curve, 2, 1, 1), sr).series
            moduli = fixed_det_rank2_odd(g, c).series
            params = {"r": 2, "g": g, "a": c + 1, "c": c, "field": "odd", "stable_range": sr}
            reports.append(_compare("identity.stable_range", params, expected, moduli, upto=sr))
    return reports


def _beta_leading(beta_ranks: Sequence[int], beta_genus_max: int) -> List[VerificationReport]:
    reports: List[VerificationReport] = []
    for r in beta_ranks:
        for g in range(2, beta_genus_max + 1):
            for curve in enumerate_curves(g):
                for c in range(0, curve.a + 1):
                    if g_t(r, curve, c, 2 * r - 1).warnings:
                        continue
                    params = _curve_params(curve, r=r, c=c)
                    tabulated = list(beta_leading(r, curve, c))
                    expanded = [int(x) for x in beta_from_gt(r, curve, c)]
                    degree = None
                    if tabulated != expanded:
                        degree = 2 * r - 2 if tabulated[0] != expanded[0] else 2 * r - 1
                    key = lookup_discrepancy("identity.beta_leading", params) if degree is not None else None
                    reports.append(value_report("identity.beta_leading", params, tabulated, expanded, degree, key))
    return reports


def _character_route(r_max: int, g_max: int, D: int) -> List[VerificationReport]:
    reports: List[VerificationReport] = []
    for r in range(2, r_max + 1, 2):
        for g in range(2, g_max + 1):
            for curve in enumerate_curves(g):
                for bundle in _bundles(curve, r):
                    route = bcg_odd_character_route(r, curve, bundle, D)
                    printed = g_t(r, curve, bundle.c, D)
                    params = _curve_params(curve, r=r, b=bundle.b, c=bundle.c, D=D)
                    reports.append(
                        _compare(
                            "identity.character_route",
                            params,
                            printed.series,
                            route.factors["G"],
                            details={"case": printed.case_label},
                        )
                    )
    return reports


def run_identity_suite(
    r_max: int,
    g_max: int,
    D: int,
    odd_genera: Sequence[int] = (3, 5, 7, 9),
    beta_ranks: Sequence[int] = (2, 4),
    beta_genus_max: int = 8,
    rank3_genus_max: int = 4,
    metrics: Optional[SuiteMetrics] = None,
) -> List[VerificationReport]:
    """
    Symbolic identities between the closed forms.

    Covers bcg * (1 - t) = bsg, bcg * (1 + t)^g = bg, odd rank independence
    from the bundle, the rank 2 odd characteristic polynomial against G_t and
    its palindromy, stable range agreement, the tabulated leading Betti
    numbers, the product form of bg and the character route to G_t.
    """
    if r_max < 2 or g_max < 2:
        raise ValueError(f"identity suite needs r_max >= 2 and g_max >= 2, got r_max={r_max}, g_max={g_max}")
    if D < 0:
        raise ValueError(f"truncation must be non-negative, got D={D}")
    metrics = metrics or get_metrics()
    logger.info(f"Running identity suite: r_max={r_max}, g_max={g_max}, D={D}")

    reports: List[VerificationReport] = []
    mod2 = _family(metrics, "identity.mod2", lambda: [r for rs in _mod2_identities(r_max, g_max, D).values() for r in rs])
    reports += mod2
    reports += _family(metrics, "identity.odd_rank_independence", lambda: _odd_rank_independence(r_max, g_max, D))
    reports += _family(metrics, "identity.rank2_odd_vs_gt", lambda: _rank2_odd_vs_gt(odd_genera))
    reports += _family(metrics, "identity.rank2_odd_structure", lambda: _rank2_odd_structure(odd_genera))
    reports += _family(
        metrics, "identity.stable_range", lambda: _stable_range_agreement(g_max, rank3_genus_max, odd_genera)
    )
    reports += _family(metrics, "identity.beta_leading", lambda: _beta_leading(beta_ranks, beta_genus_max))
    reports += _family(metrics, "identity.character_route", lambda: _character_route(r_max, g_max, D))
    return sort_reports(reports)


# =============================================================================
# Golden tables
# =============================================================================

def golden_table_suite(path: Optional[Path] = None, metrics: Optional[SuiteMetrics] = None) -> List[VerificationReport]:
    """Closed forms against the literal published polynomials."""
    metrics = metrics or get_metrics()
    tables = load_golden_tables(path)

    def rank2() -> List[VerificationReport]:
        reports = []
        for row in tables["rank2_z2"]:
            g, a = row.params["g"], row.params["a"]
            reconciled = fixed_det_rank2_z2(g, a, Rank2Mode.TABLE_RECONCILED)
            reports.append(_compare("golden.rank2_z2", dict(row.params), row.polynomial, reconciled.series))
            printed = fixed_det_rank2_z2(g, a, Rank2Mode.AS_PRINTED)
            reports.append(
                _compare(
                    "golden.rank2_z2_as_printed",
                    dict(row.params),
                    row.polynomial,
                    printed.series,
                    upto=row.polynomial.degree,
                    details={"warnings": printed.warnings},
                )
            )
        return reports

    def rank3() -> List[VerificationReport]:
        reports = []
        for row in tables["rank3_z2"]:
            g, a = row.params["g"], row.params["a"]
            top = 8 * (g - 1)
            result = fixed_det_rank3_z2(g, a - 1, top)
            params = dict(row.params, b=a - 1)
            reports.append(
                _compare("golden.rank3_z2", params, row.polynomial, result.series, details={"warnings": result.warnings})
            )
            as_labelled = fixed_det_rank3_z2(g, a, top)
            reports.append(
                _compare("golden.rank3_z2_b_equals_a", dict(row.params, b=a), row.polynomial, as_labelled.series)
            )
        return reports

    def rank2_odd() -> List[VerificationReport]:
        reports = []
        for row in tables["rank2_odd"]:
            result = fixed_det_rank2_odd(row.params["g"], row.params["c"])
            report = _compare(
                "golden.rank2_odd",
                dict(row.params),
                row.polynomial,
                result.series,
                details={"warnings": result.warnings},
            )
            reports.append(_with_boundary(report, result.warnings))
        return reports

    reports = _family(metrics, "golden.rank2_z2", rank2)
    reports += _family(metrics, "golden.rank3_z2", rank3)
    reports += _family(metrics, "golden.rank2_odd", rank2_odd)
    return sort_reports(reports)


# =============================================================================
# Oracle
# =============================================================================

ORACLE_CASES: List[Tuple[ComplexKind, ComplexParams, Tuple[str, ...]]] = [
    (ComplexKind.KOSZUL_TATE, ComplexParams(r=2, n=1), ("odd",)),
    (ComplexKind.KOSZUL_TATE, ComplexParams(r=2, n=2), ("odd",)),
    (ComplexKind.KOSZUL_TATE, ComplexParams(r=2, n=1, ghat=1), ("odd",)),
    (ComplexKind.PROP38, ComplexParams(r=2, n=1, a=0), ("F2",)),
    (ComplexKind.PROP38, ComplexParams(r=2, n=1, a=1), ("F2",)),
    (ComplexKind.PROP38, ComplexParams(r=2, n=2, a=0), ("F2",)),
    (ComplexKind.PROP38, ComplexParams(r=2, n=2, a=1), ("F2",)),
    (ComplexKind.PROP38, ComplexParams(r=2, n=2, a=2), ("F2",)),
    (ComplexKind.CASE1, ComplexParams(r=3, n=2, ghat=0), ("odd",)),
    (ComplexKind.CASE1, ComplexParams(r=3, n=1, ghat=1), ("odd",)),
    (ComplexKind.CASE2_S, ComplexParams(r=4, n=1), ("odd",)),
    (ComplexKind.CASE2_S, ComplexParams(r=4, n=2), ("odd",)),
    (ComplexKind.CASE2_T, ComplexParams(r=2, n=1, a=1, b=1), ("odd",)),
    (ComplexKind.CASE2_T, ComplexParams(r=2, n=2, a=1, b=1), ("odd",)),
    (ComplexKind.CASE2_T, ComplexParams(r=2, n=2, a=1, b=0), ("odd",)),
    (ComplexKind.CASE2_T, ComplexParams(r=2, n=2, a=2, b=1), ("odd",)),
    (ComplexKind.CASE2_T, ComplexParams(r=2, n=2, a=2, b=0), ("odd",)),
    (ComplexKind.CASE2_T, ComplexParams(r=2, n=3, a=2, b=1), ("odd",)),
] + [
    (ComplexKind.LEMMA314_S, ComplexParams(r=2, n=b + m, a=b + m, b=b), ("odd",))
    for b in (1, 0)
    for m in (1, 2, 3)
]

NEGATIVE_CONTROLS: List[Tuple[ComplexKind, ComplexParams, str, str]] = [
    (ComplexKind.CASE1, ComplexParams(r=3, n=1, ghat=1), "Q", "z_2"),
    (ComplexKind.PROP38, ComplexParams(r=2, n=2, a=0), "F2", "x_2_2"),
]


def _oracle_comparison(table: Any, kind: ComplexKind, params: ComplexParams) -> Comparison:
    probe = expected_homology(kind, params, 0)
    if probe.column is None:
        expected = expected_homology(kind, params, table.total_cap)
        return compare_hilbert(table, expected.series, table.total_cap, expected.project_chi)
    actual = table.column_series(probe.column, probe.shift)
    expected = expected_homology(kind, params, actual.trunc)
    return compare_series(actual, expected.series, actual.trunc)


def _comparison_report(check: str, params: Dict[str, Any], comparison: Comparison, details: Dict[str, Any]) -> VerificationReport:
    details = dict(details, comparison=comparison.to_dict())
    if comparison.match:
        return VerificationReport(check, params, CheckStatus.PASS, details=details)
    witness = {"degree": comparison.degree, "expected": comparison.expected, "actual": comparison.actual}
    key = lookup_discrepancy(check, params)
    if key is None:
        logger.warning(f"{check} {params}: {comparison.summary()}")
    return VerificationReport(check, params, CheckStatus.FLAGGED if key else CheckStatus.FAIL, witness, key, details)


def _oracle_fields(fields: Sequence[str], selector: Tuple[str, ...]) -> List[str]:
    if selector == ("odd",):
        return [name for name in fields if CoefficientRing.parse(name).characteristic != 2]
    return list(selector)


def run_oracle_suite(
    fields: Sequence[str] = ("Q", "F3", "F5"),
    internal_cap: int = 12,
    basis_limit: int = DEFAULT_BASIS_LIMIT,
    metrics: Optional[SuiteMetrics] = None,
) -> List[VerificationReport]:
    """
    Homology of the standard complexes against their closed forms, plus
    negative controls whose corrupted differential must produce a mismatch.
    """
    metrics = metrics or get_metrics()

    def oracle_checks() -> List[VerificationReport]:
        reports = []
        for kind, params, selector in ORACLE_CASES:
            for field_name in _oracle_fields(fields, selector):
                check = f"oracle.{kind.value}"
                report_params = dict(params.to_dict(), field=field_name, cap=internal_cap)
                ring = CoefficientRing.parse(field_name)
                try:
                    dga = build_standard_complex(kind, params, ring, internal_cap, basis_limit)
                    table = homology_hilbert(dga)
                    comparison = _oracle_comparison(table, kind, params)
                except OracleError as e:
                    logger.error(f"{check} {report_params}: oracle error: {e}", exc_info=True)
                    reports.append(
                        VerificationReport(check, report_params, CheckStatus.FAIL, {"degree": None, "error": str(e)})
                    )
                    continue
                reports.append(_comparison_report(check, report_params, comparison, {"total_cap": table.total_cap}))
        return reports

    def negative_controls() -> List[VerificationReport]:
        reports = []
        for kind, params, field_name, generator in NEGATIVE_CONTROLS:
            ring = CoefficientRing.parse(field_name)
            report_params = dict(params.to_dict(), kind=kind.value, field=field_name, corrupted=generator)
            dga = build_standard_complex(kind, params, ring, internal_cap, basis_limit)
            corrupted = with_differential(dga, generator, [])
            comparison = _oracle_comparison(homology_hilbert(corrupted), kind, params)
            details = {"comparison": comparison.to_dict()}
            if comparison.match:
                logger.warning(f"negative control {report_params} was not detected")
                witness = {"degree": None, "corrupted": generator, "checked_up_to": comparison.checked_up_to}
                reports.append(VerificationReport("oracle.negative_control", report_params, CheckStatus.FAIL, witness, None, details))
            else:
                reports.append(VerificationReport("oracle.negative_control", report_params, CheckStatus.PASS, details=details))
        return reports

    reports = _family(metrics, "oracle.complexes", oracle_checks)
    reports += _family(metrics, "oracle.negative_control", negative_controls)
    return sort_reports(reports)


# =============================================================================
# Groups
# =============================================================================

def _expected_pi1(r: int, a: int, b: int) -> Dict[str, Any]:
    """Tabulated pi1: Z/2 x (Z/2)^a for r >= 3; Z/2 acting by -1 on Z^(a-b) over (Z/2)^b for r = 2."""
    if r >= 3:
        return {"kind": "direct", "base": {"z2": a, "z": 0}, "action": [1] * a}
    return {
        "kind": "semidirect" if a > b else "direct",
        "base": {"z2": b, "z": a - b},
        "action": [1] * b + [-1] * (a - b),
    }


def run_group_suite(
    ranks: Sequence[int] = (2, 3),
    max_circles: int = 4,
    g: int = 3,
    metrics: Optional[SuiteMetrics] = None,
) -> List[VerificationReport]:
    """Fundamental group table, abelianization and mod 2 degree one cross-checks."""
    metrics = metrics or get_metrics()
    if g < 3:
        raise ValueError(f"group suite needs g >= 3, got g={g}")

    def group_checks() -> List[VerificationReport]:
        reports = []
        for r in ranks:
            for a in range(0, min(max_circles, g + 1) + 1):
                for b in range(0, a + 1):
                    params = {"r": r, "g": g, "a": a, "b": b}
                    pi1 = pi1_fixed_det_moduli(r, g, a, b)
                    reports.append(value_report("groups.pi1", params, _expected_pi1(r, a, b), pi1.to_dict()))
                    h1 = h1_fixed_det_moduli(r, g, a, b)
                    reports.append(
                        value_report("groups.h1", params, FGAbelianGroup.z2_power(a).to_dict(), h1.to_dict(), 1)
                    )
                    gauge = abelianize(pi0_cgauge(r, a, b))
                    reports.append(value_report("groups.abelianization_torsion", params, a + 1, gauge.torsion_count))
                    reports.append(
                        value_report(
                            "groups.mod2_rank_bcg", params, int(bcg_z2(r, g, a, 1).coefficient(1)), gauge.mod2_rank, 1
                        )
                    )
                    if a == 0 or r not in (2, 3):
                        continue
                    if r == 2:
                        moduli = fixed_det_rank2_z2(g, a)
                    else:
                        moduli = fixed_det_rank3_z2(g, a - 1, 1)
                    reports.append(
                        value_report("groups.mod2_rank_moduli", params, int(moduli.coefficient(1)), h1.mod2_rank, 1)
                    )
        return reports

    return sort_reports(_family(metrics, "groups", group_checks))


# =============================================================================
# Dispatch
# =============================================================================

def run_suites(
    suite: str,
    verify_config: Optional[VerifyConfig] = None,
    oracle_config: Optional[OracleConfig] = None,
    basis_limit: int = DEFAULT_BASIS_LIMIT,
    metrics: Optional[SuiteMetrics] = None,
) -> List[VerificationReport]:
    """Run one named suite, or all of them in order for 'all'."""
    if suite != "all" and suite not in SUITE_NAMES:
        raise UnknownSuiteError(f"Unknown suite '{suite}', expected one of {', '.join(SUITE_NAMES + ('all',))}")
    verify_config = verify_config or VerifyConfig()
    oracle_config = oracle_config or OracleConfig()
    metrics = metrics or get_metrics()
    selected = SUITE_NAMES if suite == "all" else (suite,)

    reports: List[VerificationReport] = []
    for name in selected:
        if name == "identities":
            reports += run_identity_suite(
                verify_config.r_max,
                verify_config.g_max,
                verify_config.truncation,
                odd_genera=verify_config.odd_genera,
                beta_ranks=verify_config.beta_ranks,
                beta_genus_max=verify_config.beta_genus_max,
                rank3_genus_max=verify_config.rank3_genus_max,
                metrics=metrics,
            )
        elif name == "golden":
            reports += golden_table_suite(metrics=metrics)
        elif name == "oracle":
            reports += run_oracle_suite(oracle_config.fields, oracle_config.internal_cap, basis_limit, metrics)
        else:
            reports += run_group_suite(
                verify_config.group_ranks, verify_config.group_max_circles, metrics=metrics
            )
    return reports
