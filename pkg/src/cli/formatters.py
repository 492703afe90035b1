# Copyright © 2025 Sierra Labs LLC
# SPDX-License-Identifier: AGPL-3.0-only
# License-Filename: LICENSE

"""
Output formatting for CLI commands.

Tabular commands produce a list of columns and a list of row dicts; every
format renders that same table. json renders a payload dict instead.
"""

import csv
import io
import json
from enum import Enum
from typing import Any, Dict, List, Optional, Sequence


class OutputFormat(str, Enum):
    """Output formats accepted by --format."""
    TEXT = "text"
    JSON = "json"
    CSV = "csv"
    MARKDOWN = "markdown"
    LATEX = "latex"


TABULAR_ONLY = (OutputFormat.CSV, OutputFormat.LATEX)


class FormatNotSupportedError(ValueError):
    """A format was requested for a command that cannot render it."""
    pass


def require_format(fmt: OutputFormat, allowed: Sequence[OutputFormat], command: str) -> None:
    if fmt not in allowed:
        names = ", ".join(f.value for f in allowed)
        raise FormatNotSupportedError(f"--format {fmt.value} does not apply to '{command}' (use one of: {names})")


def format_json(payload: Any) -> str:
    """Deterministic JSON: sorted keys, two-space indent."""
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False, default=str)


def format_csv(columns: Sequence[str], rows: Sequence[Dict[str, Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=list(columns), lineterminator="\n", extrasaction="ignore")
    writer.writeheader()
    for row in rows:
        writer.writerow(row)
    return buffer.getvalue().rstrip("\n")


def format_markdown(columns: Sequence[str], rows: Sequence[Dict[str, Any]], title: Optional[str] = None) -> str:
    lines: List[str] = []
    if title:
        lines.append(f"## {title}")
        lines.append("")
    lines.append("| " + " | ".join(columns) + " |")
    lines.append("|" + "|".join("-" * (len(col) + 2) for col in columns) + "|")
    for row in rows:
        lines.append("| " + " | ".join(str(row.get(col, "")) for col in columns) + " |")
    return "\n".join(lines)


_LATEX_SPECIALS = {
    "\\": r"\textbackslash{}",
    "&": r"\&",
    "%": r"\%",
    "$": r"\$",
    "#": r"\#",
    "_": r"\_",
    "{": r"\{",
    "}": r"\}",
    "^": r"\^{}",
    "~": r"\~{}",
}

_LATEX_SYMBOLS = {"×": r"$\times$", "⋉": r"$\ltimes$"}


def latex_escape(value: Any) -> str:
    text = "".join(_LATEX_SPECIALS.get(ch, ch) for ch in str(value))
    for symbol, replacement in _LATEX_SYMBOLS.items():
        text = text.replace(symbol, replacement)
    return text


def format_latex(columns: Sequence[str], rows: Sequence[Dict[str, Any]]) -> str:
    lines = [r"\begin{tabular}{" + "r" * len(columns) + "}", r"\hline"]
    lines.append(" & ".join(latex_escape(col) for col in columns) + r" \\")
    lines.append(r"\hline")
    for row in rows:
        lines.append(" & ".join(latex_escape(row.get(col, "")) for col in columns) + r" \\")
    lines.append(r"\hline")
    lines.append(r"\end{tabular}")
    return "\n".join(lines)


def format_table(
    fmt: OutputFormat,
    columns: Sequence[str],
    rows: Sequence[Dict[str, Any]],
    title: Optional[str] = None,
) -> str:
    """Render a table in any non-json format; text renders as Markdown."""
    if fmt == OutputFormat.CSV:
        return format_csv(columns, rows)
    if fmt == OutputFormat.LATEX:
        return format_latex(columns, rows)
    if fmt in (OutputFormat.MARKDOWN, OutputFormat.TEXT):
        return format_markdown(columns, rows, title)
    raise FormatNotSupportedError(f"format_table cannot render {fmt.value}")
