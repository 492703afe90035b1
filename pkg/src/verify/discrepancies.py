# Copyright © 2025 Sierra Labs LLC
# SPDX-License-Identifier: AGPL-3.0-only
# License-Filename: LICENSE

"""
Registry of known discrepancies between printed formulas and tables.

A mismatch whose check and parameters fall in a registered family is
reported as flagged under that key; any other mismatch is a failure.
"""

import logging
from dataclasses import dataclass
from typing import Any, Callable, Dict, Optional, Tuple

logger = logging.getLogger(__name__)

Params = Dict[str, Any]


@dataclass(frozen=True)
class KnownDiscrepancy:
    """A documented family of expected mismatches."""
    key: str
    description: str
    checks: Tuple[str, ...]
    applies: Callable[[Params], bool]

    def matches(self, check: str, params: Params) -> bool:
        if check not in self.checks:
            return False
        try:
            return bool(self.applies(params))
        except (KeyError, TypeError):
            return False


def _connected(params: Params) -> bool:
    return params.get("eps") == 1


KNOWN_DISCREPANCIES: Dict[str, KnownDiscrepancy] = {
    entry.key: entry
    for entry in (
        KnownDiscrepancy(
            "rank2_as_printed",
            "Rank 2 mod 2 formula with exponent g - a on (1+t^3) does not reproduce the tables; "
            "the tables need g - a + 1.",
            ("golden.rank2_z2_as_printed",),
            lambda p: True,
        ),
        KnownDiscrepancy(
            "rank3_b_equals_a",
            "Rank 3 mod 2 formula read with b = a disagrees with the tables, which are reproduced by b = a - 1.",
            ("golden.rank3_z2_b_equals_a",),
            lambda p: True,
        ),
        KnownDiscrepancy(
            "negative_exponent_boundary",
            "At c = g the exponent g - c - 1 is -1; the rank 2 odd characteristic polynomial is only "
            "obtained by exact division by (1+t^3).",
            ("golden.rank2_odd", "identity.rank2_odd_vs_gt"),
            lambda p: p["c"] == p["g"],
        ),
        KnownDiscrepancy(
            "beta_table_connected_c0",
            "a > c = 0 with connected complement: the G_t branch gives beta_{2r-2} = 0, the tabulated value is 1.",
            ("identity.beta_leading",),
            lambda p: _connected(p) and p["a"] > p["c"] == 0,
        ),
        KnownDiscrepancy(
            "beta_table_connected_a_eq_c",
            "a = c > 0 with connected complement: the G_t branch gives beta_{2r-1} = g + c^2 - 2c, "
            "the tabulated value is g + c^2 - c; for r = 2 beta_2 is also off by one.",
            ("identity.beta_leading",),
            lambda p: _connected(p) and p["a"] == p["c"] > 0,
        ),
        KnownDiscrepancy(
            "printed_gt_a_eq_c",
            "The printed G_t branches with a = c > 0 disagree with the character route through the T complex.",
            ("identity.character_route",),
            lambda p: p["a"] == p["c"] > 0,
        ),
        KnownDiscrepancy(
            "s_complex_no_odd_circles",
            "With no odd circles the S complex keeps the class of ebar_1, so H(S) is not zero; "
            "the T complex with a = n and b = 0 inherits the difference.",
            ("oracle.lemma314_S", "oracle.case2_T"),
            lambda p: p["b"] == 0 and p.get("a", p["n"]) == p["n"],
        ),
    )
}


def lookup_discrepancy(check: str, params: Params) -> Optional[str]:
    """Key of the registered family covering (check, params), if any."""
    for key, entry in KNOWN_DISCREPANCIES.items():
        if entry.matches(check, params):
            logger.debug(f"{check} {params} falls under known discrepancy '{key}'")
            return key
    return None


def describe(key: str) -> str:
    if key not in KNOWN_DISCREPANCIES:
        raise KeyError(f"Unknown discrepancy key '{key}'")
    return KNOWN_DISCREPANCIES[key].description
