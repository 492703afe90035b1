# Copyright © 2025 Sierra Labs LLC
# SPDX-License-Identifier: AGPL-3.0-only
# License-Filename: LICENSE

"""
Loader for the literal golden tables shipped next to this module.
"""

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Optional

import yaml

from ..algebra.series import PoincarePolynomial

logger = logging.getLogger(__name__)

GOLDEN_TABLES_PATH = Path(__file__).parent / "golden_tables.yaml"
GOLDEN_SECTIONS = ("rank2_z2", "rank3_z2", "rank2_odd")


class GoldenTableError(ValueError):
    """Golden table file is missing a section or has a malformed row."""
    pass


@dataclass(frozen=True)
class GoldenRow:
    """One published polynomial with the parameters labelling its row."""
    section: str
    params: Dict[str, int]
    coeffs: List[int]

    @property
    def polynomial(self) -> PoincarePolynomial:
        return PoincarePolynomial.from_integers(self.coeffs)


def load_golden_tables(path: Optional[Path] = None) -> Dict[str, List[GoldenRow]]:
    """Read every golden section, keeping the file's row order."""
    path = Path(path) if path else GOLDEN_TABLES_PATH
    with open(path, "r", encoding="utf-8") as f:
        data = yaml.safe_load(f) or {}

    tables: Dict[str, List[GoldenRow]] = {}
    for section in GOLDEN_SECTIONS:
        if section not in data:
            raise GoldenTableError(f"Golden table {path} has no '{section}' section")
        rows: List[GoldenRow] = []
        for entry in data[section]:
            if "coeffs" not in entry:
                raise GoldenTableError(f"Row {entry!r} in '{section}' has no coeffs")
            params = {key: int(value) for key, value in entry.items() if key != "coeffs"}
            rows.append(GoldenRow(section, params, [int(c) for c in entry["coeffs"]]))
        tables[section] = rows
    logger.debug(f"Loaded {sum(len(rows) for rows in tables.values())} golden rows from {path}")
    return tables
