# Copyright © 2025 Sierra Labs LLC
# SPDX-License-Identifier: AGPL-3.0-only
# License-Filename: LICENSE

"""
Exact algebra: coefficient rings, truncated series, sparse ranks.
"""

from .series import (
    CHARACTER_RING,
    RATIONALS,
    CharElement,
    CoefficientRing,
    NonInvertibleError,
    PoincarePolynomial,
    RingKind,
    RingMismatchError,
    SeriesError,
    TruncatedSeries,
    char_anti_invariant_part,
    char_invariant_part,
    embed_in_character_ring,
    evaluate_character,
    evaluate,
    exact_poly_division,
    palindrome_check,
    series_div,
    series_from_product,
    series_mul,
)

__all__ = [
    "CHARACTER_RING",
    "RATIONALS",
    "CharElement",
    "CoefficientRing",
    "NonInvertibleError",
    "PoincarePolynomial",
    "RingKind",
    "RingMismatchError",
    "SeriesError",
    "TruncatedSeries",
    "char_anti_invariant_part",
    "char_invariant_part",
    "embed_in_character_ring",
    "evaluate_character",
    "evaluate",
    "exact_poly_division",
    "palindrome_check",
    "series_div",
    "series_from_product",
    "series_mul",
]
