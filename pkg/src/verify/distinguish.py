# Copyright © 2025 Sierra Labs LLC
# SPDX-License-Identifier: AGPL-3.0-only
# License-Filename: LICENSE

"""
Staged separation of two fixed determinant real moduli spaces by their
Betti numbers.

Stages, in order: genus (equivalently the dimension), number of real circles
(H_1 = (Z/2)^a), for even rank the tabulated coefficients of t^(2r-2) and
t^(2r-1) in G_t, and finally the odd characteristic series of BCG through
the stable range. The first stage where the two types differ is the witness.
"""

import logging
from typing import Any, Dict, List, Optional, Tuple

from ..moduli.betti import bcg_odd, beta_leading
from ..moduli.topology import (
    RealBundleTopType,
    RealCurveType,
    TopologyError,
    bundle_from_counts,
    moduli_dimension,
    smallest_coprime_degree,
    stable_range,
    validate_curve,
)
from .report import CheckStatus, VerificationReport, series_witness

logger = logging.getLogger(__name__)

TopType = Tuple[RealCurveType, RealBundleTopType]

DISTINGUISHED = "distinguished"
INDISTINGUISHABLE = "indistinguishable by these invariants"


class DistinguishHypothesisError(ValueError):
    """The two types do not satisfy the hypotheses of the comparison."""
    pass


def parse_type_spec(spec: str) -> Tuple[int, int, int, int]:
    """Parse "g,a,eps,c" into four integers."""
    parts = [part.strip() for part in spec.split(",")]
    if len(parts) != 4:
        raise DistinguishHypothesisError(f"type must be 'g,a,eps,c', got '{spec}'")
    try:
        g, a, eps, c = (int(part) for part in parts)
    except ValueError:
        raise DistinguishHypothesisError(f"type must be four integers 'g,a,eps,c', got '{spec}'")
    return g, a, eps, c


def type_from_spec(r: int, g: int, a: int, eps: int, c: int) -> TopType:
    """
    Curve and bundle for rank r with c even circles.

    b = a - c odd circles; the degree is the smallest positive d of the parity
    of b with gcd(r, d) = 1.
    """
    curve = validate_curve(g, a, eps)
    if not 0 <= c <= a:
        raise DistinguishHypothesisError(f"0 <= c <= a fails: c={c}, a={a}")
    b = a - c
    try:
        d = smallest_coprime_degree(r, b)
    except TopologyError as e:
        raise DistinguishHypothesisError(f"no coprime degree for r={r} with b={b} odd circles: {e}") from e
    return curve, bundle_from_counts(curve, r, d, b)


def _describe(top: TopType) -> Dict[str, Any]:
    curve, bundle = top
    return {"g": curve.g, "a": curve.a, "eps": curve.eps, "b": bundle.b, "c": bundle.c, "r": bundle.r, "d": bundle.d}


def _check_hypotheses(first: TopType, second: TopType) -> int:
    (_, bundle_a), (_, bundle_b) = first, second
    if bundle_a.r != bundle_b.r:
        raise DistinguishHypothesisError(f"ranks differ: {bundle_a.r} vs {bundle_b.r}")
    for bundle in (bundle_a, bundle_b):
        if not bundle.coprime:
            raise DistinguishHypothesisError(f"gcd(r, d) = {bundle.gcd} for r={bundle.r}, d={bundle.d}; need 1")
        if bundle.curve.g < 2:
            raise DistinguishHypothesisError(f"genus must be at least 2, got g={bundle.curve.g}")
    return bundle_a.r


def distinguish(first: TopType, second: TopType, D: int) -> VerificationReport:
    """
    Staged comparison of two (curve, bundle) types of the same rank.

    The verdict and witness are symmetric in the two arguments up to the
    order of the witness values.
    """
    r = _check_hypotheses(first, second)
    if D < 0:
        raise DistinguishHypothesisError(f"truncation must be non-negative, got D={D}")
    (curve_a, bundle_a), (curve_b, bundle_b) = first, second
    params = {"r": r, "D": D, "A": _describe(first), "B": _describe(second)}
    stages: List[str] = []

    def verdict(stage: str, degree: Optional[int], values: List[Any]) -> VerificationReport:
        witness = {"stage": stage, "degree": degree, "values": values}
        logger.info(f"distinguish r={r}: distinguished at stage '{stage}' (degree {degree}): {values}")
        return VerificationReport(
            "distinguish", params, CheckStatus.PASS, witness, details={"verdict": DISTINGUISHED, "stages": stages}
        )

    stages.append("genus")
    if curve_a.g != curve_b.g:
        return verdict("genus", None, [moduli_dimension(r, curve_a.g), moduli_dimension(r, curve_b.g)])

    stages.append("circles")
    if curve_a.a != curve_b.a:
        return verdict("circles", 1, [curve_a.a, curve_b.a])

    if r % 2 == 0:
        stages.append("beta")
        beta_a = beta_leading(r, curve_a, bundle_a.c)
        beta_b = beta_leading(r, curve_b, bundle_b.c)
        for offset, degree in enumerate((2 * r - 2, 2 * r - 1)):
            if beta_a[offset] != beta_b[offset]:
                return verdict("beta", degree, [beta_a[offset], beta_b[offset]])

    stages.append("series")
    limit = min(D, stable_range(r, curve_a.g))
    if limit >= 0:
        series_a = bcg_odd(r, curve_a, bundle_a, limit).series
        series_b = bcg_odd(r, curve_b, bundle_b, limit).series
        witness = series_witness(series_a, series_b, limit)
        if witness is not None:
            return verdict("series", witness["degree"], [witness["expected"], witness["actual"]])

    logger.info(f"distinguish r={r}: {INDISTINGUISHABLE}")
    return VerificationReport(
        "distinguish", params, CheckStatus.PASS, details={"verdict": INDISTINGUISHABLE, "stages": stages}
    )
