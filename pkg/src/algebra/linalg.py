# Copyright © 2025 Sierra Labs LLC
# SPDX-License-Identifier: AGPL-3.0-only
# License-Filename: LICENSE

"""
Exact sparse rank computation over a coefficient field.

Rows are dictionaries {column: coefficient}. Elimination keeps one
normalized pivot row per pivot column and reduces every incoming row
against the pivots in increasing column order.
"""

import logging
from typing import Dict, Iterable, Tuple

from .series import Coefficient, CoefficientRing, RingMismatchError

logger = logging.getLogger(__name__)

Row = Dict[int, Coefficient]


def rank_from_row_dicts(rows: Iterable[Row], ring: CoefficientRing) -> Tuple[int, Dict[int, Row]]:
    """
    Sparse Gaussian elimination.

    Returns (rank, pivots) where pivots maps pivot column to the remainder of
    its normalized row (pivot coefficient 1, pivot column omitted). Every
    column in a pivot row is larger than its pivot column.
    """
    if not ring.is_field:
        raise RingMismatchError(f"Rank requires a field, got {ring.name}")

    pivots: Dict[int, Row] = {}
    rank = 0
    for row in rows:
        r = {c: v for c, v in row.items() if not ring.is_zero(v)}
        for pc in sorted(pivots.keys()):
            if not r:
                break
            coeff = r.pop(pc, None)
            if coeff is None:
                continue
            for c, pv in pivots[pc].items():
                value = ring.sub(r.get(c, ring.zero()), ring.mul(coeff, pv))
                if ring.is_zero(value):
                    r.pop(c, None)
                else:
                    r[c] = value
        if not r:
            continue
        pivot_col = min(r.keys())
        inv = ring.inv(r.pop(pivot_col))
        pivots[pivot_col] = {c: ring.mul(v, inv) for c, v in r.items()}
        rank += 1
    return rank, pivots


def matrix_rank(rows: Iterable[Row], ring: CoefficientRing) -> int:
    """Rank of the matrix whose rows are the given sparse dictionaries."""
    rank, _ = rank_from_row_dicts(rows, ring)
    return rank
