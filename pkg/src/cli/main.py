# Copyright © 2025 Sierra Labs LLC
# SPDX-License-Identifier: AGPL-3.0-only
# License-Filename: LICENSE

"""
moduli-betti command line interface.

Commands:
- betti: Poincare series of BCG, BSG, BG or the fixed determinant moduli space
- classify: real curve types of a given genus
- pi1: fundamental group and H_1 of the moduli space
- verify: run the verification suites
- distinguish: staged Betti number separation of two types

Exit codes: 0 success, 1 unexpected verification failure or internal error,
2 parameter error.
"""

import argparse
import json
import logging
import sys
from datetime import datetime
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence

from ..moduli.betti import (
    BettiResult,
    bcg_odd,
    bcg_z2,
    bg_z2,
    bsg_odd,
    bsg_z2,
    fixed_det_rank2_odd,
    fixed_det_rank2_z2,
    fixed_det_rank3_z2,
)
from ..moduli.groups import abelianize, h1_fixed_det_moduli, pi1_fixed_det_moduli
from ..moduli.topology import (
    RealBundleTopType,
    RealCurveType,
    TopologyError,
    bundle_from_counts,
    enumerate_curves,
    quotient_surface,
    smallest_coprime_degree,
    validate_curve,
)
from ..shared.config import Config
from ..shared.logging_setup import setup_logging
from ..shared.metrics import SuiteMetrics
from ..verify.distinguish import DISTINGUISHED, distinguish, parse_type_spec, type_from_spec
from ..verify.duckdb_writer import DUCKDB_AVAILABLE, VerificationDuckDBWriter
from ..verify.markdown_writer import ReportMarkdownWriter
from ..verify.report import CheckStatus, VerificationReport, sort_reports, summarize
from ..verify.suites import SUITE_NAMES, run_suites
from .formatters import (
    OutputFormat,
    format_json,
    format_table,
    require_format,
)

logger = logging.getLogger(__name__)

__version__ = "0.1.0"

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_PARAMETER_ERROR = 2

TARGETS = ("moduli", "bcg", "bsg", "bg")
CHARACTERISTICS = ("2", "odd")

ALL_FORMATS = tuple(OutputFormat)
REPORT_FORMATS = (OutputFormat.TEXT, OutputFormat.JSON, OutputFormat.MARKDOWN)


class NoClosedFormError(ValueError):
    """No closed form is implemented for the requested target and parameters."""
    pass


# =============================================================================
# Parameter helpers
# =============================================================================

def default_eps(g: int, a: int) -> int:
    """Connected complement unless a = g + 1 forces a disconnected one."""
    return 1 if a <= g else 0


def default_degree(r: int, b: int) -> int:
    """Smallest coprime degree of the right parity, else the parity itself."""
    try:
        return smallest_coprime_degree(r, b)
    except TopologyError:
        return b % 2


def _curve(args: argparse.Namespace) -> RealCurveType:
    eps = args.eps if args.eps is not None else default_eps(args.genus, args.circles)
    return validate_curve(args.genus, args.circles, eps)


def _bundle(args: argparse.Namespace, curve: RealCurveType) -> RealBundleTopType:
    d = args.degree if args.degree is not None else default_degree(args.rank, args.odd)
    return bundle_from_counts(curve, args.rank, d, args.odd)


def _resolve_trunc(args: argparse.Namespace, config: Config) -> int:
    if args.trunc is not None:
        if args.trunc < 0:
            raise ValueError(f"--trunc must be non-negative, got {args.trunc}")
        return args.trunc
    return config.computation.default_truncation


# =============================================================================
# betti
# =============================================================================

def compute_betti(
    r: int,
    curve: RealCurveType,
    bundle: RealBundleTopType,
    char: str,
    target: str,
    D: int,
) -> BettiResult:
    """Dispatch a (characteristic, target) pair to its closed form."""
    g, a = curve.g, curve.a
    if char not in CHARACTERISTICS:
        raise ValueError(f"characteristic must be one of {', '.join(CHARACTERISTICS)}, got '{char}'")
    if target not in TARGETS:
        raise ValueError(f"target must be one of {', '.join(TARGETS)}, got '{target}'")

    if char == "2":
        if target == "bcg":
            return bcg_z2(r, g, a, D)
        if target == "bsg":
            return bsg_z2(r, g, a, D)
        if target == "bg":
            return bg_z2(r, g, a, D)
        if not bundle.coprime:
            raise NoClosedFormError(f"moduli space needs gcd(r, d) = 1, got r={r}, d={bundle.d}")
        if r == 2:
            return fixed_det_rank2_z2(g, a)
        if r == 3:
            if a < 1:
                raise NoClosedFormError("no closed form for the rank 3 moduli space without real circles")
            return fixed_det_rank3_z2(g, a - 1, D)
        raise NoClosedFormError(f"no closed form for the moduli space in characteristic 2 at r={r}")

    if target == "bcg":
        return bcg_odd(r, curve, bundle, D)
    if target == "bsg":
        return bsg_odd(r, curve, bundle, D)
    if target == "bg":
        raise NoClosedFormError("no closed form for BG in odd characteristic")
    if r == 2 and g % 2 == 1 and bundle.coprime:
        return fixed_det_rank2_odd(g, bundle.c)
    raise NoClosedFormError(
        f"no closed form for the moduli space in odd characteristic at r={r}, g={g}, d={bundle.d}"
    )


def cmd_betti(args: argparse.Namespace, config: Config) -> int:
    fmt = OutputFormat(args.format)
    D = _resolve_trunc(args, config)
    char = args.char or config.computation.default_characteristic
    curve = _curve(args)
    bundle = _bundle(args, curve)
    result = compute_betti(args.rank, curve, bundle, char, args.target, D)
    params = {
        "r": args.rank,
        "g": curve.g,
        "a": curve.a,
        "b": bundle.b,
        "c": bundle.c,
        "eps": curve.eps,
        "d": bundle.d,
        "char": char,
        "target": args.target,
        "trunc": D,
    }

    if fmt == OutputFormat.JSON:
        payload = {"command": "betti", "params": params, "str": str(result.series)}
        payload.update(result.to_dict())
        print(format_json(payload))
    elif fmt == OutputFormat.TEXT:
        print(result.series)
        print(f"case: {result.case_label}")
        for warning in result.warnings:
            print(f"warning: {warning}")
    else:
        ring = result.series.ring
        columns = ["r", "g", "a", "b", "eps", "char", "target", "degree", "coefficient"]
        rows = [
            dict(params, degree=k, coefficient=ring.format(c))
            for k, c in enumerate(result.series.coeffs)
        ]
        print(format_table(fmt, columns, rows, title=f"{args.target} ({result.case_label})"))
    return EXIT_OK


# =============================================================================
# classify / pi1
# =============================================================================

def cmd_classify(args: argparse.Namespace, config: Config) -> int:
    fmt = OutputFormat(args.format)
    rows: List[Dict[str, Any]] = []
    for curve in enumerate_curves(args.genus):
        ghat, n = quotient_surface(curve)
        rows.append(
            {
                "g": curve.g,
                "a": curve.a,
                "eps": curve.eps,
                "connected": curve.connected_complement,
                "ghat": ghat,
                "n": n,
            }
        )
    if fmt == OutputFormat.JSON:
        print(format_json({"command": "classify", "genus": args.genus, "curves": rows}))
    else:
        columns = ["g", "a", "eps", "connected", "ghat", "n"]
        print(format_table(fmt, columns, rows, title=f"Real curves of genus {args.genus}"))
    return EXIT_OK


def cmd_pi1(args: argparse.Namespace, config: Config) -> int:
    fmt = OutputFormat(args.format)
    curve = _curve(args)
    pi1 = pi1_fixed_det_moduli(args.rank, curve.g, curve.a, args.odd)
    h1 = h1_fixed_det_moduli(args.rank, curve.g, curve.a, args.odd)
    abelian = abelianize(pi1)
    params = {"r": args.rank, "g": curve.g, "a": curve.a, "b": args.odd}

    if fmt == OutputFormat.TEXT:
        print(f"{pi1}; H1 = {h1}")
    elif fmt == OutputFormat.JSON:
        print(
            format_json(
                {
                    "command": "pi1",
                    "params": params,
                    "pi1": {"str": str(pi1), **pi1.to_dict()},
                    "abelianization": {"str": str(abelian), **abelian.to_dict()},
                    "h1": {"str": str(h1), **h1.to_dict()},
                }
            )
        )
    else:
        row = dict(params, pi1=str(pi1), h1=str(h1))
        print(format_table(fmt, ["r", "g", "a", "b", "pi1", "h1"], [row]))
    return EXIT_OK


# =============================================================================
# verify
# =============================================================================

def _text_summary(reports: Sequence[VerificationReport], suite: str) -> str:
    counts = summarize(reports)
    lines = [f"suite: {suite}", "  ".join(f"{status}: {count}" for status, count in counts.items())]
    for report in reports:
        if report.status == CheckStatus.PASS:
            continue
        label = report.status.value.upper()
        key = f" [{report.discrepancy}]" if report.discrepancy else ""
        params = json.dumps(report.params, sort_keys=True, ensure_ascii=False, default=str)
        degree = report.witness.get("degree") if report.witness else None
        lines.append(f"{label}{key} {report.check} {params} at degree {degree}")
    return "\n".join(lines)


def _write_history(config: Config, suite: str, reports: Sequence[VerificationReport], timestamp: datetime) -> None:
    if not config.features.duckdb_sink.enabled:
        return
    if not DUCKDB_AVAILABLE:
        logger.warning("features.duckdb_sink.enabled is set but duckdb is not installed; history not written")
        return
    try:
        with VerificationDuckDBWriter(config.paths.history_db) as writer:
            writer.write_run(suite, reports, timestamp=timestamp, version=__version__)
    except Exception as e:
        logger.error(f"Failed to write verification history: {e}", exc_info=True)


def cmd_verify(args: argparse.Namespace, config: Config) -> int:
    fmt = OutputFormat(args.format)
    require_format(fmt, REPORT_FORMATS, "verify")
    timestamp = datetime.now()
    metrics = SuiteMetrics()

    reports = sort_reports(
        run_suites(
            args.suite,
            verify_config=config.verify,
            oracle_config=config.oracle,
            basis_limit=config.computation.basis_limit,
            metrics=metrics,
        )
    )
    stats = metrics.get_stats()

    if args.jsonl:
        path = Path(args.jsonl)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text("".join(report.to_json() + "\n" for report in reports), encoding="utf-8")
        logger.info(f"Wrote {len(reports)} reports to {path}")

    writer = ReportMarkdownWriter(config.paths.reports_dir)
    if args.markdown:
        writer.write_summary(reports, args.suite, stats, path=Path(args.markdown), timestamp=timestamp)

    _write_history(config, args.suite, reports, timestamp)

    if fmt == OutputFormat.JSON:
        for report in reports:
            print(report.to_json())
    elif fmt == OutputFormat.MARKDOWN:
        print(writer.generate_markdown(reports, args.suite, stats, timestamp))
    else:
        print(_text_summary(reports, args.suite))

    failures = summarize(reports)[CheckStatus.FAIL.value]
    if failures:
        logger.warning(f"verify {args.suite}: {failures} unexpected failures")
        return EXIT_FAILURE
    return EXIT_OK


# =============================================================================
# distinguish
# =============================================================================

def cmd_distinguish(args: argparse.Namespace, config: Config) -> int:
    fmt = OutputFormat(args.format)
    require_format(fmt, (OutputFormat.TEXT, OutputFormat.JSON), "distinguish")
    D = _resolve_trunc(args, config)
    first = type_from_spec(args.rank, *parse_type_spec(args.type_a))
    second = type_from_spec(args.rank, *parse_type_spec(args.type_b))
    report = distinguish(first, second, D)

    if fmt == OutputFormat.JSON:
        print(format_json(report.to_dict()))
    elif report.details["verdict"] == DISTINGUISHED:
        witness = report.witness or {}
        left, right = witness["values"]
        print(f"{DISTINGUISHED} at stage '{witness['stage']}' (degree {witness['degree']}): {left} vs {right}")
    else:
        print(report.details["verdict"])
    return EXIT_OK


# =============================================================================
# Parser
# =============================================================================

def _add_format(parser: argparse.ArgumentParser, choices: Sequence[OutputFormat]) -> None:
    parser.add_argument(
        "--format",
        choices=[fmt.value for fmt in choices],
        default=OutputFormat.TEXT.value,
        help="Output format (default: text)",
    )


def _add_type_arguments(parser: argparse.ArgumentParser, with_bundle: bool = True) -> None:
    parser.add_argument("--rank", "-r", type=int, required=True, help="Rank r of the bundle")
    parser.add_argument("--genus", "-g", type=int, required=True, help="Genus g of the curve")
    parser.add_argument("--circles", "-a", type=int, required=True, help="Number a of real circles")
    parser.add_argument("--odd", "-b", type=int, required=True, help="Number b of circles with odd w")
    parser.add_argument(
        "--eps",
        type=int,
        choices=[0, 1],
        default=None,
        help="1 if the complement of the real locus is connected (default: 1 when a <= g)",
    )
    if with_bundle:
        parser.add_argument(
            "--degree", "-d",
            type=int,
            default=None,
            help="Degree d (default: smallest positive d = b mod 2 with gcd(r, d) = 1)",
        )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="moduli_betti",
        description="Poincare series, Betti numbers and fundamental groups of real moduli spaces",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  %(prog)s betti --rank 2 --genus 3 --circles 4 --odd 1 --target moduli
  %(prog)s betti -r 3 -g 2 -a 1 -b 1 --char odd --trunc 8 --target bcg
  %(prog)s classify --genus 2
  %(prog)s pi1 --rank 2 --genus 3 --circles 2 --odd 1
  %(prog)s verify --suite golden --markdown summary.md
  %(prog)s distinguish --a 6,3,1,2 --b 6,3,1,0 --rank 2
        """,
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--config-dir", type=Path, default=None, help="Directory containing config.yaml")
    parser.add_argument(
        "--log-level",
        default=None,
        help="Log level for stderr and the log file (default: logging.level from config)",
    )

    subparsers = parser.add_subparsers(dest="command", help="Command to execute")
    subparsers.required = True

    betti_parser = subparsers.add_parser("betti", help="Compute a Poincare series")
    _add_type_arguments(betti_parser)
    betti_parser.add_argument("--char", choices=list(CHARACTERISTICS), default=None,
                              help="Coefficient characteristic (default: computation.default_characteristic)")
    betti_parser.add_argument("--trunc", "-D", type=int, default=None,
                              help="Truncation degree (default: computation.default_truncation or MODULI_BETTI_TRUNC)")
    betti_parser.add_argument("--target", choices=list(TARGETS), default="bcg",
                              help="Space whose series is computed (default: bcg)")
    _add_format(betti_parser, ALL_FORMATS)
    betti_parser.set_defaults(handler=cmd_betti)

    classify_parser = subparsers.add_parser("classify", help="List real curve types of a genus")
    classify_parser.add_argument("--genus", "-g", type=int, required=True, help="Genus g")
    _add_format(classify_parser, ALL_FORMATS)
    classify_parser.set_defaults(handler=cmd_classify)

    pi1_parser = subparsers.add_parser("pi1", help="Fundamental group and H_1 of the moduli space")
    _add_type_arguments(pi1_parser, with_bundle=False)
    _add_format(pi1_parser, ALL_FORMATS)
    pi1_parser.set_defaults(handler=cmd_pi1)

    verify_parser = subparsers.add_parser("verify", help="Run verification suites")
    verify_parser.add_argument("--suite", choices=list(SUITE_NAMES) + ["all"], default="all",
                               help="Suite to run (default: all)")
    verify_parser.add_argument("--jsonl", type=Path, default=None, help="Write reports as JSON lines")
    verify_parser.add_argument("--markdown", type=Path, default=None, help="Write a Markdown summary")
    _add_format(verify_parser, REPORT_FORMATS)
    verify_parser.set_defaults(handler=cmd_verify)

    distinguish_parser = subparsers.add_parser("distinguish", help="Separate two types by Betti numbers")
    distinguish_parser.add_argument("--a", dest="type_a", required=True, help="First type as 'g,a,eps,c'")
    distinguish_parser.add_argument("--b", dest="type_b", required=True, help="Second type as 'g,a,eps,c'")
    distinguish_parser.add_argument("--rank", "-r", type=int, required=True, help="Rank r")
    distinguish_parser.add_argument("--trunc", "-D", type=int, default=None,
                                    help="Truncation degree for the series stage")
    _add_format(distinguish_parser, (OutputFormat.TEXT, OutputFormat.JSON))
    distinguish_parser.set_defaults(handler=cmd_distinguish)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Parse arguments, run one command and return its exit code."""
    parser = build_parser()
    args = parser.parse_args(argv)
    handler: Callable[[argparse.Namespace, Config], int] = args.handler

    try:
        config = Config(args.config_dir)
        setup_logging(
            args.log_level or config.logging.level,
            log_file=config.paths.home / "moduli_betti.log",
            config=config,
        )
        logger.debug(f"Running '{args.command}' with {vars(args)}")
        return handler(args, config)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARAMETER_ERROR
    except Exception as e:
        logger.error(f"'{args.command}' failed: {e}", exc_info=True)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FAILURE
