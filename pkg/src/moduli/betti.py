# Copyright © 2025 Sierra Labs LLC
# SPDX-License-Identifier: AGPL-3.0-only
# License-Filename: LICENSE

"""
Closed-form Poincare series of real gauge group classifying spaces and of
fixed determinant real moduli spaces.

Mod 2 formulas are products of factors (1 +/- t^k)^e. Odd characteristic
formulas for even rank split as F_t * G_t, where G_t depends on the circle
data and is evaluated through the character ring: the symmetrization
1/2 [f(u, v) + f(-u, -v)] is the chi-invariant part of f(chi*u, chi*v).
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from ..algebra.series import (
    CHARACTER_RING,
    RATIONALS,
    CharElement,
    PoincarePolynomial,
    TruncatedSeries,
    char_invariant_part,
    evaluate_character,
    exact_poly_division,
    series_from_product,
)
from .topology import RealBundleTopType, RealCurveType, quotient_surface

logger = logging.getLogger(__name__)

SeriesLike = Union[TruncatedSeries, PoincarePolynomial]

CHI = CharElement(0, 1)


class BettiParameterError(ValueError):
    """Parameters outside the range where a closed form is stated."""
    pass


class UnknownSeriesKindError(ValueError):
    """Requested loop group series kind does not exist."""
    pass


class FormulaError(ArithmeticError):
    """A division that must be exact left a remainder."""
    pass


class Rank2Mode(str, Enum):
    """Exponent reading of the rank two mod 2 moduli formula."""
    AS_PRINTED = "as_printed"
    TABLE_RECONCILED = "table_reconciled"


class GtCase(str, Enum):
    """Branches of G_t, selected by (a, c, eps)."""
    NO_REAL_CIRCLES = "a = 0"
    CONNECTED_SOME_ODD = "a > c ≥ 0 connected"
    CONNECTED_ALL_EVEN = "a = c > 0 connected"
    DISCONNECTED_ALL_ODD = "a > c = 0 disconnected"
    DISCONNECTED_C_ODD = "a > c > 0, c odd, disconnected"
    DISCONNECTED_C_EVEN = "a > c > 0, c even, disconnected"
    DISCONNECTED_ALL_EVEN = "a = c > 0 disconnected"


class LoopGroupKind(str, Enum):
    """Loop group classifying spaces with a closed Poincare series."""
    BLSU = "BLSU"
    BLSO = "BLSO"
    BLSO_INVARIANT = "BLSO_invariant"
    TAU_ALPHA_Z2_FIBER = "tau_alpha_z2_fiber"
    TAU_GAMMA_Z2_FIBER = "tau_gamma_z2_fiber"
    TAU_BETA = "tau_beta"
    TAU_GAMMA_ODDCHAR = "tau_gamma_oddchar"


@dataclass
class BettiResult:
    """
    A computed Poincare series together with the formula branch that produced it.

    factors holds named sub-series (F, G, remainder, ...). warnings lists every
    reason the series might not be a genuine Poincare series: negative formal
    exponents, negative or fractional coefficients, inexact divisions.
    """
    series: SeriesLike
    case_label: str
    factors: Dict[str, SeriesLike] = field(default_factory=dict)
    warnings: List[str] = field(default_factory=list)

    def coefficient(self, k: int):
        return self.series.coefficient(k)

    def coefficients(self) -> List[Any]:
        return list(self.series.coeffs)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "series": self.series.to_dict(),
            "case": self.case_label,
            "factors": {name: value.to_dict() for name, value in self.factors.items()},
            "warnings": list(self.warnings),
        }


# =============================================================================
# Helpers
# =============================================================================

def _require(condition: bool, message: str) -> None:
    if not condition:
        raise BettiParameterError(message)


def _require_trunc(D: int) -> None:
    _require(isinstance(D, int) and not isinstance(D, bool) and D >= 0, f"truncation degree must be a non-negative integer, got {D!r}")


def _product(factors: Sequence[Tuple[Any, int, int]], D: int) -> TruncatedSeries:
    return series_from_product(factors, RATIONALS, D)


def _symmetrized(r: int, exp_u: int, exp_v: int, D: int) -> TruncatedSeries:
    """1/2 [(1+u)^i (1+v)^j + (1-u)^i (1-v)^j] with u = t^(r-1), v = t^r."""
    return char_invariant_part(series_from_product([(CHI, r - 1, exp_u), (CHI, r, exp_v)], CHARACTER_RING, D))


def _pontryagin_product(count: int, g: int, D: int) -> TruncatedSeries:
    factors: List[Tuple[int, int, int]] = []
    for k in range(1, count + 1):
        factors += [(1, 4 * k - 1, g), (1, 4 * k + 1, g), (-1, 4 * k, -2)]
    return _product(factors, D)


def _finish(result: BettiResult) -> BettiResult:
    """Attach coefficient warnings and log the result."""
    for k, c in enumerate(result.series.coeffs):
        if c < 0:
            result.warnings.append(f"negative coefficient {c} at t^{k}")
            break
    for k, c in enumerate(result.series.coeffs):
        if Fraction(c).denominator != 1:
            result.warnings.append(f"non-integral coefficient {c} at t^{k}")
            break
    logger.debug(f"Evaluated case '{result.case_label}'")
    for warning in result.warnings:
        logger.warning(f"{result.case_label}: {warning}")
    return result


def _check_rga(r: int, g: int, a: int, D: int) -> None:
    _require(r >= 1, f"rank must be at least 1, got r={r}")
    _require(g >= 2, f"genus must be at least 2, got g={g}")
    _require(0 <= a <= g + 1, f"0 <= a <= g + 1 fails: a={a}, g={g}")
    _require_trunc(D)


# =============================================================================
# Mod 2 gauge group series
# =============================================================================

def _bsg_factors(r: int, g: int, a: int) -> List[Tuple[int, int, int]]:
    factors: List[Tuple[int, int, int]] = []
    for k in range(2, r + 1):
        factors += [
            (1, k - 1, a),
            (1, k, a),
            (1, 2 * k - 1, g + 1 - a),
            (-1, 2 * k, -1),
            (-1, 2 * k - 2, -1),
        ]
    return factors


def bg_z2(r: int, g: int, a: int, D: int) -> BettiResult:
    """P_t(BG_R; Z/2) = (1+t)^g / (1-t) * P_t(BSG_R; Z/2)."""
    _check_rga(r, g, a, D)
    series = _product([(1, 1, g), (-1, 1, -1)] + _bsg_factors(r, g, a), D)
    return _finish(BettiResult(series, "BG mod 2"))


def bg_z2_product_form(r: int, g: int, a: int, D: int) -> BettiResult:
    """P_t(BG_R; Z/2) written as (1 - t^2r) / (1+t^r)^a * prod_k (1+t^k)^2a (1+t^(2k-1))^(g+1-a) / (1-t^2k)^2."""
    _check_rga(r, g, a, D)
    factors: List[Tuple[int, int, int]] = [(-1, 2 * r, 1), (1, r, -a)]
    for k in range(1, r + 1):
        factors += [(1, k, 2 * a), (1, 2 * k - 1, g + 1 - a), (-1, 2 * k, -2)]
    return _finish(BettiResult(_product(factors, D), "BG mod 2 product form"))


def bsg_z2(r: int, g: int, a: int, D: int) -> BettiResult:
    _check_rga(r, g, a, D)
    return _finish(BettiResult(_product(_bsg_factors(r, g, a), D), "BSG mod 2"))


def bcg_z2(r: int, g: int, a: int, D: int) -> BettiResult:
    """P_t(BCG_R; Z/2) = P_t(BSG_R; Z/2) / (1 - t)."""
    _check_rga(r, g, a, D)
    series = _product([(-1, 1, -1)] + _bsg_factors(r, g, a), D)
    return _finish(BettiResult(series, "BCG mod 2"))


# =============================================================================
# Odd characteristic gauge group series
# =============================================================================

def f_t(r: int, g: int, D: int) -> TruncatedSeries:
    """The factor F_t of even rank, independent of the circle data."""
    _require(r >= 2 and r % 2 == 0, f"F_t is defined for even rank, got r={r}")
    _require_trunc(D)
    return _pontryagin_product(r // 2 - 1, g, D)


def g_t(r: int, curve: RealCurveType, c: int, D: int) -> BettiResult:
    """
    The factor G_t of even rank.

    The branch is selected by (a, c, eps) of the curve and bundle. A negative
    exponent on (1 + t^(2r-1)) is expanded as a formal series and flagged.
    """
    _require(r >= 2 and r % 2 == 0, f"G_t is defined for even rank, got r={r}")
    _require(0 <= c <= curve.a, f"0 <= c <= a fails: c={c}, a={curve.a}")
    _require_trunc(D)
    g, a = curve.g, curve.a
    w = 2 * r - 1
    warnings: List[str] = []

    def w_power(exponent: int) -> TruncatedSeries:
        if exponent < 0:
            warnings.append(f"negative formal exponent {exponent} on (1+t^{w})")
        return _product([(1, w, exponent)], D)

    if a == 0:
        case = GtCase.NO_REAL_CIRCLES
        series = _product([(1, w, g), (-1, 2 * r, -1)], D)
    elif curve.eps == 1 and a > c:
        case = GtCase.CONNECTED_SOME_ODD
        series = _symmetrized(r, c, c, D) * w_power(g - c - 1)
    elif curve.eps == 1:
        case = GtCase.CONNECTED_ALL_EVEN
        series = _symmetrized(r, c, c - 1, D) * _product([(-1, r, -1)], D) * w_power(g - c)
    elif c == 0:
        case = GtCase.DISCONNECTED_ALL_ODD
        series = _product([(1, w, g), (-1, 2 * r - 2, -1)], D)
    elif a > c and c % 2 == 1:
        case = GtCase.DISCONNECTED_C_ODD
        series = _symmetrized(r, c, c, D) * w_power(g - c - 1)
    elif a > c:
        case = GtCase.DISCONNECTED_C_EVEN
        tail = _product([(1, 1, c + 1), (-1, 2 * r - 2, -1)], D).shift((r - 1) * (c + 2)).truncate(D)
        series = (tail + _symmetrized(r, c, c, D)) * w_power(g - c - 1)
    else:
        case = GtCase.DISCONNECTED_ALL_EVEN
        series = _symmetrized(r, c, c - 1, D) * _product([(-1, 2 * r, -1)], D) * w_power(g - c)

    return _finish(BettiResult(series, case.value, warnings=warnings))


def bcg_odd(r: int, curve: RealCurveType, bundle: RealBundleTopType, D: int) -> BettiResult:
    """
    P_t(BCG_R; F) for a field of odd or zero characteristic.

    Odd rank gives a product depending only on (r, g); even rank gives F_t * G_t.
    """
    _require_trunc(D)
    g = curve.g
    if r % 2 == 1:
        series = _pontryagin_product(r // 2, g, D)
        return _finish(BettiResult(series, "odd rank"))

    f_series = f_t(r, g, D)
    g_result = g_t(r, curve, bundle.c, D)
    return _finish(
        BettiResult(
            f_series * g_result.series,
            g_result.case_label,
            factors={"F": f_series, "G": g_result.series},
            warnings=list(g_result.warnings),
        )
    )


def beta_leading(r: int, curve: RealCurveType, c: int) -> Tuple[int, int]:
    """The coefficients of t^(2r-2) and t^(2r-1) in G_t, from their tabulated case values."""
    _require(r >= 2 and r % 2 == 0, f"beta_leading needs even rank, got r={r}")
    _require(0 <= c <= curve.a, f"0 <= c <= a fails: c={c}, a={curve.a}")
    g, a = curve.g, curve.a
    connected = curve.eps == 1

    if c >= 1:
        low = c * (c - 1) // 2
    elif a >= 1:
        low = 1
    else:
        low = 0

    if a > c > 0:
        high = g + c * c - c - 1
    elif a > c == 0:
        high = g - 1 if connected else g
    elif a == c > 0:
        high = g + c * c - c if connected else g + c * c - 2 * c
    else:
        high = g
    return low, high


def beta_from_gt(r: int, curve: RealCurveType, c: int) -> Tuple[Any, Any]:
    """The same two coefficients read off an expansion of G_t."""
    result = g_t(r, curve, c, 2 * r - 1)
    return result.coefficient(2 * r - 2), result.coefficient(2 * r - 1)


def t_complex_series(r: int, n: int, a: int, b: int, D: int) -> TruncatedSeries:
    """
    chi-graded Poincare series of the T factor for even rank.

    n boundary circles of the quotient surface, of which a are real and b of
    those odd. u = t^(r-1), v = t^r and w = t^(2r-1).
    """
    _require(r >= 2 and r % 2 == 0, f"T factor is defined for even rank, got r={r}")
    _require(n >= 1, f"need at least one boundary circle, got n={n}")
    _require(0 <= b <= a <= n, f"0 <= b <= a <= n fails: b={b}, a={a}, n={n}")
    _require_trunc(D)
    ring = CHARACTER_RING
    u, v, w = r - 1, r, 2 * r - 1
    neg_chi = CharElement(0, -1)

    def product(factors: Sequence[Tuple[Any, int, int]]) -> TruncatedSeries:
        return series_from_product(factors, ring, D)

    if a == 0:
        return product([(1, w, n - 1), (-1, 2 * r, -1)])
    if a < n and b > 0:
        return product([(CHI, u, a - b), (CHI, v, a - b), (1, w, n - a + b - 2)])
    if a < n:
        return product([(CHI, u, a), (CHI, v, a - 1), (1, w, n - a - 1), (neg_chi, v, -1)])
    if b == n:
        return product([(1, w, n - 1), (-1, 2 * r - 2, -1)])
    m = n - b
    if b > 0:
        chi_power = CharElement(0, 1) if m % 2 else CharElement(1, 0)
        tail = product([(1, 1, m + 1), (-1, 2 * r - 2, -1)]).scale(chi_power)
        tail = tail.shift((r - 1) * m + 2 * r - 2).truncate(D)
        return (tail + product([(CHI, u, m), (CHI, v, m)])) * product([(1, w, b - 2)])
    return product([(CHI, u, n), (CHI, v, n - 1), (1, w, -1), (neg_chi, v, -1)])


def bcg_odd_character_route(r: int, curve: RealCurveType, bundle: RealBundleTopType, D: int) -> BettiResult:
    """F_t * G_t with G_t = (1 + w)^(2 g_hat) times the chi-invariant part of the T series."""
    _require(r % 2 == 0, f"character route is defined for even rank, got r={r}")
    ghat, n = quotient_surface(curve)
    t_series = t_complex_series(r, n, curve.a, bundle.b, D)
    g_series = _product([(1, 2 * r - 1, 2 * ghat)], D) * char_invariant_part(t_series)
    f_series = f_t(r, curve.g, D)
    return _finish(
        BettiResult(
            f_series * g_series,
            "character route",
            factors={"F": f_series, "G": g_series, "T": t_series},
        )
    )


def bsg_odd(r: int, curve: RealCurveType, bundle: RealBundleTopType, D: int) -> BettiResult:
    """P_t(BSG_R; F) for a field of odd or zero characteristic."""
    if r % 2 == 1:
        return bcg_odd(r, curve, bundle, D)
    ghat, n = quotient_surface(curve)
    t_series = t_complex_series(r, n, curve.a, bundle.b, D)
    f_series = f_t(r, curve.g, D)
    s_series = f_series * _product([(1, 2 * r - 1, 2 * ghat)], D) * evaluate_character(t_series, 1)
    return _finish(BettiResult(s_series, "BSG even rank", factors={"F": f_series, "T": t_series}))


# =============================================================================
# Loop groups
# =============================================================================

def _blso(r: int, D: int) -> TruncatedSeries:
    half = r // 2
    if r % 2 == 1:
        return _product([f for k in range(1, half + 1) for f in ((1, 4 * k - 1, 1), (-1, 4 * k, -1))], D)
    factors = [f for k in range(1, half) for f in ((1, 4 * k - 1, 1), (-1, 4 * k, -1))]
    return _product(factors + [(1, 2 * half - 1, 1), (-1, 2 * half, -1)], D)


def _blso_invariant(r: int, D: int) -> TruncatedSeries:
    return _product([f for k in range(1, r // 2 + 1) for f in ((1, 4 * k - 1, 1), (-1, 4 * k, -1))], D)


def loop_group_series(kind: Union[LoopGroupKind, str], r: int, D: int) -> TruncatedSeries:
    """Poincare series of a loop group classifying space, or of a free module factor over BSU_r."""
    try:
        kind = LoopGroupKind(kind)
    except ValueError:
        raise UnknownSeriesKindError(f"Unknown loop group series kind '{kind}'")
    _require(r >= 2, f"loop group series need r >= 2, got r={r}")
    _require_trunc(D)

    if kind == LoopGroupKind.BLSU:
        return _product([f for k in range(2, r + 1) for f in ((1, 2 * k - 1, 1), (-1, 2 * k, -1))], D)
    if kind == LoopGroupKind.BLSO:
        return _blso(r, D)
    if kind == LoopGroupKind.BLSO_INVARIANT:
        return _blso_invariant(r, D)
    if kind == LoopGroupKind.TAU_ALPHA_Z2_FIBER:
        return _product([f for k in range(2, r + 1) for f in ((1, k - 1, 1), (1, k, 1))], D)
    if kind == LoopGroupKind.TAU_GAMMA_Z2_FIBER:
        return _product([(1, 2 * k - 1, 1) for k in range(2, r + 1)], D)
    if kind == LoopGroupKind.TAU_BETA:
        return _blso(r if r % 2 else r - 1, D)
    return _blso(r, D) if r % 2 else _blso_invariant(r, D)


# =============================================================================
# Fixed determinant moduli spaces
# =============================================================================

def _polynomial(factors: Sequence[Tuple[int, int, int]]) -> PoincarePolynomial:
    degree = sum(k * e for _, k, e in factors)
    return PoincarePolynomial.from_series(_product(factors, max(degree, 0)))


def fixed_det_rank2_z2(
    g: int,
    a: int,
    mode: Union[Rank2Mode, str] = Rank2Mode.TABLE_RECONCILED,
    trunc: Optional[int] = None,
) -> BettiResult:
    """
    Mod 2 Poincare polynomial of the rank two moduli space with odd degree.

    table_reconciled uses the exponent g - a + 1 on (1 + t^3); as_printed uses
    g - a. A remainder after dividing by (1 - t)(1 - t^2) is an error in
    table_reconciled mode and a warning in as_printed mode. The as_printed
    exponent is -1 when a = g + 1; that case is expanded as a series up to
    trunc (default 3g).
    """
    mode = Rank2Mode(mode)
    _require(g >= 2, f"genus must be at least 2, got g={g}")
    _require(1 <= a <= g + 1, f"1 <= a <= g + 1 fails: a={a}, g={g}")
    exponent = g - a + 1 if mode == Rank2Mode.TABLE_RECONCILED else g - a
    label = f"rank 2 mod 2 ({mode.value})"
    warnings: List[str] = []

    if exponent < 0:
        D = 3 * g if trunc is None else trunc
        _require_trunc(D)
        head = _product([(1, 1, a - 1), (1, 2, a - 1), (1, 3, exponent)], D)
        correction = _product([(1, 1, g)], D).shift(g).truncate(D).scale(2 ** (a - 1))
        series = (head - correction) * _product([(-1, 1, -1), (-1, 2, -1)], D)
        warnings.append(f"negative formal exponent {exponent} on (1+t^3); expanded as a series")
        return _finish(BettiResult(series, label, warnings=warnings))

    head = _polynomial([(1, 1, a - 1), (1, 2, a - 1), (1, 3, exponent)])
    correction = PoincarePolynomial.from_integers([0] * g + [2 ** (a - 1)]) * _polynomial([(1, 1, g)])
    denominator = PoincarePolynomial.from_integers([1, -1, -1, 1])
    quotient, remainder = exact_poly_division(head - correction, denominator)
    factors: Dict[str, SeriesLike] = {}
    if not remainder.is_zero():
        if mode == Rank2Mode.TABLE_RECONCILED:
            raise FormulaError(f"rank 2 mod 2 formula leaves remainder {remainder} at g={g}, a={a}")
        warnings.append(f"division by (1-t)(1-t^2) leaves remainder {remainder}")
        factors["remainder"] = remainder
    return _finish(BettiResult(quotient, label, factors=factors, warnings=warnings))


def fixed_det_rank3_z2(g: int, b: int, D: int) -> BettiResult:
    """
    Mod 2 Poincare series of the rank three moduli space, degree prime to 3.

    Evaluated as T1 - T2 + T3 where the three terms carry 1, 2^b and 4^b. The
    expansion runs past the expected top degree 8(g - 1) so that a non-vanishing
    tail is detected.
    """
    _require(g >= 2, f"genus must be at least 2, got g={g}")
    _require(b >= 0, f"b must be non-negative, got b={b}")
    _require_trunc(D)
    top = 8 * (g - 1)
    N = max(D, top + 2)

    t1 = _product([(1, 1, b), (1, 2, 2 * b), (1, 3, g), (1, 5, g - b), (-1, 1, -1), (-1, 2, -2), (-1, 3, -1)], N)
    t2 = _product([(1, 1, g + b), (1, 2, b), (1, 3, g - b), (-1, 1, -3), (-1, 3, -1)], N)
    t2 = t2.shift(2 * g - 1).truncate(N).scale(2 ** b)
    t3 = _product([(1, 1, 2 * g), (-1, 1, -2), (-1, 2, -2)], N)
    t3 = t3.shift(3 * g - 1).truncate(N).scale(4 ** b)
    full = t1 - t2 + t3

    warnings: List[str] = []
    tail = [k for k in range(top + 1, N + 1) if full.coeffs[k] != 0]
    if tail:
        warnings.append(f"series does not terminate at degree {top}: t^{tail[0]} has coefficient {full.coeffs[tail[0]]}")
    result = BettiResult(full.truncate(D), "rank 3 mod 2", factors={"T1": t1.truncate(D)}, warnings=warnings)
    return _finish(result)


def fixed_det_rank2_odd(g: int, c: int) -> BettiResult:
    """
    Poincare polynomial of the rank two moduli space over a field of odd characteristic.

    1/2 (1+t^3)^(g-c-1) [(1+t)^c (1+t^2)^c + (1-t)^c (1-t^2)^c] for odd g.
    When c = g the exponent is -1; the bracket is then divided by 1 + t^3
    exactly and a boundary warning is attached.
    """
    _require(g >= 3 and g % 2 == 1, f"genus must be odd and at least 3, got g={g}")
    _require(0 <= c <= g, f"0 <= c <= g fails: c={c}, g={g}")
    bracket = PoincarePolynomial.from_series(_symmetrized(2, c, c, 3 * c))
    exponent = g - c - 1
    warnings: List[str] = []
    if exponent >= 0:
        poly = bracket * _polynomial([(1, 3, exponent)])
    else:
        poly, remainder = exact_poly_division(bracket, PoincarePolynomial.from_integers([1, 0, 0, 1]))
        if not remainder.is_zero():
            raise FormulaError(f"(1+t^3) does not divide the bracket at g={g}, c={c}: remainder {remainder}")
        warnings.append(f"negative exponent boundary c = g = {g}: divided exactly by (1+t^3)")
    return _finish(BettiResult(poly, "rank 2 odd characteristic", warnings=warnings))
