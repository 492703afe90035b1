# Copyright © 2025 Sierra Labs LLC
# SPDX-License-Identifier: AGPL-3.0-only
# License-Filename: LICENSE

"""
Verification Markdown Summary Writer.

Writes a human-readable summary of a verification run: status counts,
flagged rows with their witnesses, failures, and per-family metrics.
"""

import json
import logging
from collections import Counter
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from .discrepancies import KNOWN_DISCREPANCIES
from .report import CheckStatus, VerificationReport, summarize

logger = logging.getLogger(__name__)


def _inline(value: Any) -> str:
    return json.dumps(value, sort_keys=True, ensure_ascii=False, default=str)


class ReportMarkdownWriter:
    """
    Writes verification summaries to Markdown files.

    Formats a list of VerificationReport into tables grouped by status.
    """

    def __init__(self, output_dir: Optional[Path] = None):
        """
        Initialize Markdown writer.

        Args:
            output_dir: Directory for timestamped summaries when no explicit
                        path is given (default: ~/.moduli_betti/reports/)
        """
        self.output_dir = output_dir

    def write_summary(
        self,
        reports: Sequence[VerificationReport],
        suite: str,
        metrics: Optional[Dict[str, Dict[str, Any]]] = None,
        path: Optional[Path] = None,
        timestamp: Optional[datetime] = None,
    ) -> Path:
        """
        Write a verification summary to a Markdown file.

        Args:
            reports: Reports of the run
            suite: Suite name the run was started with
            metrics: SuiteMetrics.get_stats() output
            path: Exact output file; otherwise a timestamped file in output_dir
            timestamp: Timestamp for the header and filename (default: now)

        Returns:
            Path to written Markdown file
        """
        if timestamp is None:
            timestamp = datetime.now()

        if path is None:
            output_path = self.output_dir or (Path.home() / ".moduli_betti" / "reports")
            path = output_path / f"verify_{suite}_{timestamp.strftime('%Y%m%d_%H%M%S')}.md"
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)

        content = self.generate_markdown(reports, suite, metrics or {}, timestamp)
        path.write_text(content, encoding='utf-8')

        logger.info(f"Wrote verification summary to {path}")
        return path

    def generate_markdown(
        self,
        reports: Sequence[VerificationReport],
        suite: str,
        metrics: Dict[str, Dict[str, Any]],
        timestamp: datetime,
    ) -> str:
        lines = []

        # Header
        counts = summarize(reports)
        lines.append("# Verification Summary")
        lines.append("")
        lines.append(f"**Suite**: `{suite}`")
        lines.append(f"**Generated**: {timestamp.isoformat()}")
        lines.append(f"**Checks**: {len(reports)}")
        lines.append("")
        lines.append("---")
        lines.append("")

        lines.extend(self._format_counts(reports, counts))

        flagged = [report for report in reports if report.status == CheckStatus.FLAGGED]
        if flagged:
            lines.append("## Flagged (known discrepancies)")
            lines.append("")
            lines.extend(self._format_flagged(flagged))
            lines.append("")

        failures = [report for report in reports if report.status == CheckStatus.FAIL]
        lines.append("## Failures")
        lines.append("")
        if failures:
            lines.extend(self._format_rows(failures))
        else:
            lines.append("*No unexpected failures*")
        lines.append("")

        if metrics:
            lines.append("## Metrics")
            lines.append("")
            lines.extend(self._format_metrics(metrics))
            lines.append("")

        return "\n".join(lines)

    def _format_counts(self, reports: Sequence[VerificationReport], counts: Dict[str, int]) -> List[str]:
        """Totals, then one row per check name."""
        lines = ["## Counts", ""]
        lines.append(" | ".join(f"{status}: {count}" for status, count in counts.items()))
        lines.append("")
        lines.append("| Check | Pass | Fail | Flagged |")
        lines.append("|-------|------|------|---------|")
        per_check: Dict[str, Counter] = {}
        for report in reports:
            per_check.setdefault(report.check, Counter())[report.status.value] += 1
        for check in sorted(per_check):
            c = per_check[check]
            lines.append(f"| `{check}` | {c['pass']} | {c['fail']} | {c['flagged']} |")
        lines.append("")
        return lines

    def _format_flagged(self, flagged: Sequence[VerificationReport]) -> List[str]:
        lines = []
        by_key: Dict[str, List[VerificationReport]] = {}
        for report in flagged:
            by_key.setdefault(report.discrepancy or "unregistered", []).append(report)
        for key in sorted(by_key):
            lines.append(f"### `{key}`")
            lines.append("")
            if key in KNOWN_DISCREPANCIES:
                lines.append(KNOWN_DISCREPANCIES[key].description)
                lines.append("")
            lines.extend(self._format_rows(by_key[key]))
            lines.append("")
        return lines

    def _format_rows(self, reports: Sequence[VerificationReport]) -> List[str]:
        lines = ["| Check | Parameters | Witness |", "|-------|------------|---------|"]
        for report in reports:
            lines.append(f"| `{report.check}` | `{_inline(report.params)}` | `{_inline(report.witness)}` |")
        return lines

    def _format_metrics(self, metrics: Dict[str, Dict[str, Any]]) -> List[str]:
        lines = [
            "| Family | Runs | Checks | Failed | Flagged | Avg (ms) | Max (ms) |",
            "|--------|------|--------|--------|---------|----------|----------|",
        ]
        for family in sorted(metrics):
            stats = metrics[family]
            lines.append(
                f"| `{family}` | {stats['count']} | {stats['checks']} | {stats['failed']} | {stats['flagged']} | "
                f"{stats['avg_duration_ms']:.1f} | {stats['max_duration_ms']:.1f} |"
            )
        return lines
