# Copyright © 2025 Sierra Labs LLC
# SPDX-License-Identifier: AGPL-3.0-only
# License-Filename: LICENSE

"""
Standard complexes whose homology computes the Eilenberg-Moore E2 page of
real gauge group classifying spaces, and the closed forms they should match.

Index conventions: i runs over the n boundary circles, i' over 2..n, k over
2..r. For odd rank r = 2r'+1, k' runs over 1..r'. For even rank r = 2r',
k'' runs over 1..r'-1. Of the first a circles (the real ones), the first b
are odd.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple, Union

from ..algebra.series import (
    RATIONALS,
    CoefficientRing,
    TruncatedSeries,
    series_from_product,
)
from ..moduli.betti import t_complex_series
from .dga import (
    DEFAULT_BASIS_LIMIT,
    ComplexParameterError,
    DifferentialTerm,
    Flavor,
    Generator,
    PresentedDGA,
    term,
)

logger = logging.getLogger(__name__)


class ComplexKind(str, Enum):
    KOSZUL_TATE = "koszul_tate"
    PROP38 = "prop38"
    CASE1 = "case1"
    CASE2_S = "case2_S"
    CASE2_T = "case2_T"
    LEMMA314_S = "lemma314_S"


@dataclass(frozen=True)
class ComplexParams:
    """
    Parameters of a standard complex.

    n is the number of boundary circles of the quotient surface, ghat its
    genus; a and b count real and odd circles.
    """
    r: int
    n: int = 1
    ghat: int = 0
    a: int = 0
    b: int = 0

    @property
    def g(self) -> int:
        return 2 * self.ghat + self.n - 1

    def to_dict(self) -> Dict[str, int]:
        return {"r": self.r, "n": self.n, "ghat": self.ghat, "a": self.a, "b": self.b}


@dataclass
class ExpectedHomology:
    """
    Closed form a complex's homology should reproduce.

    column is None for the total degree series; otherwise the series is read
    off that column with t^shift divided out.
    """
    series: TruncatedSeries
    project_chi: bool = False
    column: Optional[int] = None
    shift: int = 0


def _check(params: ComplexParams) -> None:
    if params.r < 2:
        raise ComplexParameterError(f"rank must be at least 2, got r={params.r}")
    if params.n < 1:
        raise ComplexParameterError(f"need at least one boundary circle, got n={params.n}")
    if params.ghat < 0:
        raise ComplexParameterError(f"ghat must be non-negative, got {params.ghat}")
    if not 0 <= params.b <= params.a <= params.n:
        raise ComplexParameterError(f"0 <= b <= a <= n fails: b={params.b}, a={params.a}, n={params.n}")


def _exterior(name: str, column: int, degree: int, chi: int = 0, d: Tuple[DifferentialTerm, ...] = ()) -> Generator:
    return Generator(name, column, degree, Flavor.EXTERIOR, chi, d)


def _polynomial(name: str, degree: int, chi: int = 0) -> Generator:
    return Generator(name, 0, degree, Flavor.POLYNOMIAL, chi)


def _divided(name: str, degree: int, d: Tuple[DifferentialTerm, ...] = ()) -> Generator:
    return Generator(name, -1, degree, Flavor.DIVIDED_POWER, 0, d)


def _a_block(ghat: int, r: int) -> List[Generator]:
    """The exterior algebra A on 2*ghat generators of each degree 2k-1."""
    return [_exterior(f"A_{j}_{k}", 0, 2 * k - 1) for k in range(2, r + 1) for j in range(1, 2 * ghat + 1)]


def _pontryagin_block(n: int, kp: int) -> List[Generator]:
    gens: List[Generator] = []
    for i in range(1, n + 1):
        gens.append(_exterior(f"pbar_{i}_{kp}", 0, 4 * kp - 1))
        gens.append(_polynomial(f"p_{i}_{kp}", 4 * kp))
    return gens


def _pontryagin_koszul(n: int, kp: int) -> List[Generator]:
    """x and z generators killing p_i - p_1 and the sum of the pbar in Pontryagin level kp."""
    gens: List[Generator] = []
    for ip in range(2, n + 1):
        gens.append(_exterior(f"x_{ip}_{2 * kp}", -1, 4 * kp, d=(term(1, f"p_{ip}_{kp}"), term(-1, f"p_1_{kp}"))))
        gens.append(_exterior(f"x_{ip}_{2 * kp + 1}", -1, 4 * kp + 2))
    gens.append(_divided(f"z_{2 * kp}", 4 * kp - 1, tuple(term(1, f"pbar_{i}_{kp}") for i in range(1, n + 1))))
    gens.append(_divided(f"z_{2 * kp + 1}", 4 * kp + 1))
    return gens


def koszul_tate(params: ComplexParams) -> List[Generator]:
    r, n = params.r, params.n
    gens: List[Generator] = []
    for k in range(2, r + 1):
        for i in range(1, n + 1):
            gens.append(_exterior(f"cbar_{i}_{k}", 0, 2 * k - 1))
            gens.append(_polynomial(f"c_{i}_{k}", 2 * k))
        for ip in range(2, n + 1):
            gens.append(_exterior(f"x_{ip}_{k}", -1, 2 * k, d=(term(1, f"c_{ip}_{k}"), term(-1, f"c_1_{k}"))))
        gens.append(_divided(f"z_{k}", 2 * k - 1, tuple(term(1, f"cbar_{i}_{k}") for i in range(1, n + 1))))
    return gens + _a_block(params.ghat, r)


def prop38(params: ComplexParams) -> List[Generator]:
    """
    Mod 2 complex Gamma(z_k) V A S(c) wedge(x), with d(x_i'k) = c_i'k + c_1k.

    V is modeled as an exterior algebra with the same Poincare series: for each
    real circle one generator in degrees k-1 and k, for each other circle one
    in degree 2k-1.
    """
    r, n, a = params.r, params.n, params.a
    gens: List[Generator] = []
    for k in range(2, r + 1):
        for i in range(1, n + 1):
            if i <= a:
                gens.append(_exterior(f"v_{i}_{k}_lo", 0, k - 1))
                gens.append(_exterior(f"v_{i}_{k}_hi", 0, k))
            else:
                gens.append(_exterior(f"v_{i}_{k}", 0, 2 * k - 1))
            gens.append(_polynomial(f"c_{i}_{k}", 2 * k))
        for ip in range(2, n + 1):
            gens.append(_exterior(f"x_{ip}_{k}", -1, 2 * k, d=(term(1, f"c_{ip}_{k}"), term(1, f"c_1_{k}"))))
        gens.append(_divided(f"z_{k}", 2 * k - 1))
    return gens + _a_block(params.ghat, r)


def case1(params: ComplexParams) -> List[Generator]:
    if params.r % 2 == 0:
        raise ComplexParameterError(f"case1 needs odd rank, got r={params.r}")
    gens: List[Generator] = []
    for kp in range(1, params.r // 2 + 1):
        gens += _pontryagin_block(params.n, kp)
        gens += _pontryagin_koszul(params.n, kp)
    return gens + _a_block(params.ghat, params.r)


def case2_s(params: ComplexParams) -> List[Generator]:
    if params.r % 2 == 1:
        raise ComplexParameterError(f"case2_S needs even rank, got r={params.r}")
    gens: List[Generator] = []
    for kpp in range(1, params.r // 2):
        gens += _pontryagin_block(params.n, kpp)
        gens += _pontryagin_koszul(params.n, kpp)
    return gens + _a_block(params.ghat, params.r)


def case2_t(params: ComplexParams) -> List[Generator]:
    """
    The T factor: Gamma(z_r), wedge(x_i'r), the Euler pairs of the even real
    circles and the top Pontryagin pairs of the non-real circles.

    e_i and ebar_i carry chi weight 1. The top Pontryagin class of circle i is
    p_i for i > a, e_i^2 for b < i <= a and zero for i <= b.
    """
    if params.r % 2 == 1:
        raise ComplexParameterError(f"case2_T needs even rank, got r={params.r}")
    r, n, a, b = params.r, params.n, params.a, params.b
    gens: List[Generator] = []
    for i in range(b + 1, a + 1):
        gens.append(_exterior(f"ebar_{i}", 0, r - 1, chi=1))
        gens.append(_polynomial(f"e_{i}", r, chi=1))
    for i in range(a + 1, n + 1):
        gens.append(_exterior(f"pbar_{i}", 0, 2 * r - 1))
        gens.append(_polynomial(f"p_{i}", 2 * r))

    def top_class(i: int, sign: int) -> List[DifferentialTerm]:
        if i <= b:
            return []
        if i <= a:
            return [term(sign, (f"e_{i}", 2))]
        return [term(sign, f"p_{i}")]

    for ip in range(2, n + 1):
        gens.append(_exterior(f"x_{ip}", -1, 2 * r, d=tuple(top_class(ip, 1) + top_class(1, -1))))
    z_terms = [term(2, f"ebar_{i}", f"e_{i}") for i in range(b + 1, a + 1)]
    z_terms += [term(1, f"pbar_{i}") for i in range(a + 1, n + 1)]
    gens.append(_divided("z", 2 * r - 1, tuple(z_terms)))
    return gens


def lemma314_s(params: ComplexParams) -> List[Generator]:
    """
    S tensor Gamma(z) with d(z) = sum 2 ebar_i e_i over i = b+1..n.

    e_i squares to zero except e_1 when b = 0, which is polynomial.
    """
    if params.r % 2 == 1:
        raise ComplexParameterError(f"lemma314_S needs even rank, got r={params.r}")
    r, n, b = params.r, params.n, params.b
    if b >= n:
        raise ComplexParameterError(f"lemma314_S needs b < n, got b={b}, n={n}")
    gens: List[Generator] = []
    for i in range(b + 1, n + 1):
        gens.append(_exterior(f"ebar_{i}", 0, r - 1, chi=1))
        if b == 0 and i == 1:
            gens.append(_polynomial(f"e_{i}", r, chi=1))
        else:
            gens.append(_exterior(f"e_{i}", 0, r, chi=1))
    gens.append(_divided("z", 2 * r - 1, tuple(term(2, f"ebar_{i}", f"e_{i}") for i in range(b + 1, n + 1))))
    return gens


_BUILDERS = {
    ComplexKind.KOSZUL_TATE: koszul_tate,
    ComplexKind.PROP38: prop38,
    ComplexKind.CASE1: case1,
    ComplexKind.CASE2_S: case2_s,
    ComplexKind.CASE2_T: case2_t,
    ComplexKind.LEMMA314_S: lemma314_s,
}


def build_standard_complex(
    kind: Union[ComplexKind, str],
    params: ComplexParams,
    ring: CoefficientRing = RATIONALS,
    cap: int = 12,
    basis_limit: int = DEFAULT_BASIS_LIMIT,
) -> PresentedDGA:
    """Build one of the standard complexes over ring, enumerable to internal degree cap."""
    try:
        kind = ComplexKind(kind)
    except ValueError:
        raise ComplexParameterError(f"Unknown complex kind '{kind}'")
    _check(params)
    if kind == ComplexKind.PROP38 and ring.characteristic != 2:
        raise ComplexParameterError(f"prop38 is a mod 2 complex, got {ring.name}")
    generators = _BUILDERS[kind](params)
    name = f"{kind.value}(" + ", ".join(f"{k}={v}" for k, v in params.to_dict().items()) + ")"
    logger.debug(f"Built {name} with {len(generators)} generators over {ring.name}")
    return PresentedDGA(generators, ring, cap, basis_limit, name=name)


# =============================================================================
# Expected homology
# =============================================================================

def _product(factors: List[Tuple[Any, int, int]], D: int) -> TruncatedSeries:
    return series_from_product(factors, RATIONALS, D)


def expected_homology(kind: Union[ComplexKind, str], params: ComplexParams, D: int) -> ExpectedHomology:
    """The closed form the homology of a standard complex should reproduce up to total degree D."""
    kind = ComplexKind(kind)
    _check(params)
    r, n, g = params.r, params.n, params.g

    if kind == ComplexKind.KOSZUL_TATE:
        factors = [f for k in range(2, r + 1) for f in ((1, 2 * k - 1, g), (-1, 2 * k, -1))]
        return ExpectedHomology(_product(factors, D))

    if kind == ComplexKind.PROP38:
        a = params.a
        factors = []
        for k in range(2, r + 1):
            factors += [(1, k - 1, a), (1, k, a), (1, 2 * k - 1, g + 1 - a), (-1, 2 * k, -1), (-1, 2 * k - 2, -1)]
        return ExpectedHomology(_product(factors, D))

    if kind in (ComplexKind.CASE1, ComplexKind.CASE2_S):
        count = r // 2 if kind == ComplexKind.CASE1 else r // 2 - 1
        factors = [f for k in range(1, count + 1) for f in ((1, 4 * k - 1, g), (1, 4 * k + 1, g), (-1, 4 * k, -2))]
        if kind == ComplexKind.CASE2_S:
            factors.append((1, 2 * r - 1, 2 * params.ghat))
        return ExpectedHomology(_product(factors, D))

    if kind == ComplexKind.CASE2_T:
        return ExpectedHomology(t_complex_series(r, n, params.a, params.b, D))

    m = n - params.b
    if params.b == 0:
        series = TruncatedSeries.zero(RATIONALS, D)
    else:
        series = _product([(1, 1, m)], D).shift(m * (r - 1)).truncate(D)
    return ExpectedHomology(series, column=-1, shift=2 * r - 1)
