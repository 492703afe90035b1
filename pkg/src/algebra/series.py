# Copyright © 2025 Sierra Labs LLC
# SPDX-License-Identifier: AGPL-3.0-only
# License-Filename: LICENSE

"""
Exact truncated power series and polynomial arithmetic.

Coefficients live in one of three rings: the rationals, a prime field, or the
character ring of Z/2 (basis {1, chi} with chi^2 = 1 and rational
coefficients). Every Poincare series in the package is carried by a
TruncatedSeries; closed polynomials are carried by PoincarePolynomial.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import comb
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple, Union

from sympy import isprime

logger = logging.getLogger(__name__)


class SeriesError(ValueError):
    """Base exception for series arithmetic errors."""
    pass


class RingMismatchError(SeriesError):
    """Operands live over different coefficient rings."""
    pass


class NonInvertibleError(SeriesError):
    """An element that must be a unit is not invertible."""
    pass


class RingKind(str, Enum):
    """Supported coefficient rings."""
    RATIONALS = "rationals"
    PRIME_FIELD = "prime_field"
    CHARACTER = "character"


@dataclass(frozen=True)
class CharElement:
    """Element a + b*chi of the character ring of Z/2."""
    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))

    def __add__(self, other: "CharElement") -> "CharElement":
        return CharElement(self.a + other.a, self.b + other.b)

    def __sub__(self, other: "CharElement") -> "CharElement":
        return CharElement(self.a - other.a, self.b - other.b)

    def __neg__(self) -> "CharElement":
        return CharElement(-self.a, -self.b)

    def __mul__(self, other: "CharElement") -> "CharElement":
        # chi^2 = 1
        return CharElement(
            self.a * other.a + self.b * other.b,
            self.a * other.b + self.b * other.a,
        )

    def at(self, sign: int) -> Fraction:
        """Evaluate at chi = sign (+1 or -1)."""
        return self.a + sign * self.b

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def is_unit(self) -> bool:
        return self.a * self.a != self.b * self.b

    def inverse(self) -> "CharElement":
        det = self.a * self.a - self.b * self.b
        if det == 0:
            raise NonInvertibleError(f"{self} is not a unit in the character ring (a^2 = b^2)")
        return CharElement(self.a / det, -self.b / det)

    def __str__(self) -> str:
        if self.b == 0:
            return _format_fraction(self.a)
        chi_part = "χ" if abs(self.b) == 1 else f"{_format_fraction(abs(self.b))}χ"
        if self.a == 0:
            return chi_part if self.b > 0 else f"-{chi_part}"
        sign = "+" if self.b > 0 else "-"
        return f"({_format_fraction(self.a)}{sign}{chi_part})"


Coefficient = Union[int, Fraction, CharElement]


def _format_fraction(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _encode_fraction(value: Fraction) -> Any:
    if value.denominator == 1:
        return value.numerator
    return [value.numerator, value.denominator]


def _decode_fraction(obj: Any) -> Fraction:
    if isinstance(obj, list):
        if len(obj) != 2:
            raise SeriesError(f"Rational coefficient must be [num, den], got {obj!r}")
        return Fraction(int(obj[0]), int(obj[1]))
    return Fraction(int(obj))


def generalized_binomial(n: int, j: int) -> int:
    """Binomial coefficient C(n, j) for any integer n and j >= 0."""
    if j < 0:
        return 0
    if n >= 0:
        return comb(n, j)
    # (1 + x)^n for n < 0
    return (-1) ** j * comb(-n + j - 1, j)


@dataclass(frozen=True)
class CoefficientRing:
    """
    Coefficient ring of a series.

    Elements are Fractions over the rationals, canonical residues (ints) over a
    prime field, and CharElement over the character ring.
    """
    kind: RingKind
    p: Optional[int] = None

    def __post_init__(self):
        if self.kind == RingKind.PRIME_FIELD:
            if not isinstance(self.p, int) or self.p < 2 or not isprime(self.p):
                raise SeriesError(f"Prime field requires a prime characteristic, got p={self.p!r}")
        elif self.p is not None:
            raise SeriesError(f"Ring kind {self.kind.value} does not take a characteristic p")

    @classmethod
    def rationals(cls) -> "CoefficientRing":
        return cls(RingKind.RATIONALS)

    @classmethod
    def prime_field(cls, p: int) -> "CoefficientRing":
        return cls(RingKind.PRIME_FIELD, p)

    @classmethod
    def character(cls) -> "CoefficientRing":
        return cls(RingKind.CHARACTER)

    @classmethod
    def parse(cls, name: str) -> "CoefficientRing":
        """
        Parse a ring name.

        Accepts "Q", "F<p>" (e.g. "F3") and "Q[chi]".
        """
        text = name.strip()
        if text in ("Q", "QQ", "rationals"):
            return cls.rationals()
        if text in ("Q[chi]", "chi", "character"):
            return cls.character()
        if text.startswith("F") and text[1:].isdigit():
            return cls.prime_field(int(text[1:]))
        raise SeriesError(f"Unknown coefficient ring '{name}' (expected Q, F<p> or Q[chi])")

    @property
    def name(self) -> str:
        if self.kind == RingKind.RATIONALS:
            return "Q"
        if self.kind == RingKind.PRIME_FIELD:
            return f"F{self.p}"
        return "Q[chi]"

    @property
    def characteristic(self) -> int:
        return self.p if self.kind == RingKind.PRIME_FIELD else 0

    @property
    def is_field(self) -> bool:
        return self.kind != RingKind.CHARACTER

    def __str__(self) -> str:
        return self.name

    # -------------------------------------------------------------------------
    # Element arithmetic
    # -------------------------------------------------------------------------

    def zero(self) -> Coefficient:
        return self.coerce(0)

    def one(self) -> Coefficient:
        return self.coerce(1)

    def chi(self) -> CharElement:
        if self.kind != RingKind.CHARACTER:
            raise RingMismatchError(f"chi only exists in the character ring, not {self.name}")
        return CharElement(0, 1)

    def coerce(self, value: Coefficient) -> Coefficient:
        """Convert an int, Fraction or CharElement into a canonical ring element."""
        if self.kind == RingKind.CHARACTER:
            if isinstance(value, CharElement):
                return value
            return CharElement(Fraction(value), 0)

        if isinstance(value, CharElement):
            if value.b != 0:
                raise RingMismatchError(f"Cannot coerce {value} into {self.name}")
            value = value.a

        if self.kind == RingKind.RATIONALS:
            return Fraction(value)

        p = self.p
        if isinstance(value, Fraction):
            if value.denominator % p == 0:
                raise NonInvertibleError(f"Denominator of {value} vanishes in {self.name}")
            return (value.numerator * pow(value.denominator, -1, p)) % p
        return int(value) % p

    def add(self, x: Coefficient, y: Coefficient) -> Coefficient:
        if self.kind == RingKind.PRIME_FIELD:
            return (x + y) % self.p
        return x + y

    def sub(self, x: Coefficient, y: Coefficient) -> Coefficient:
        if self.kind == RingKind.PRIME_FIELD:
            return (x - y) % self.p
        return x - y

    def neg(self, x: Coefficient) -> Coefficient:
        if self.kind == RingKind.PRIME_FIELD:
            return (-x) % self.p
        return -x

    def mul(self, x: Coefficient, y: Coefficient) -> Coefficient:
        if self.kind == RingKind.PRIME_FIELD:
            return (x * y) % self.p
        return x * y

    def power(self, x: Coefficient, n: int) -> Coefficient:
        if n < 0:
            return self.power(self.inv(x), -n)
        result = self.one()
        base = x
        while n:
            if n & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            n >>= 1
        return result

    def is_zero(self, x: Coefficient) -> bool:
        if isinstance(x, CharElement):
            return x.is_zero()
        return x == 0

    def is_unit(self, x: Coefficient) -> bool:
        if isinstance(x, CharElement):
            return x.is_unit()
        return not self.is_zero(x)

    def inv(self, x: Coefficient) -> Coefficient:
        if not self.is_unit(x):
            raise NonInvertibleError(f"{x} is not invertible in {self.name}")
        if isinstance(x, CharElement):
            return x.inverse()
        if self.kind == RingKind.PRIME_FIELD:
            return pow(x, -1, self.p)
        return 1 / Fraction(x)

    # -------------------------------------------------------------------------
    # Serialization
    # -------------------------------------------------------------------------

    def encode(self, x: Coefficient) -> Any:
        if self.kind == RingKind.CHARACTER:
            return [_encode_fraction(x.a), _encode_fraction(x.b)]
        if self.kind == RingKind.PRIME_FIELD:
            return int(x)
        return _encode_fraction(x)

    def decode(self, obj: Any) -> Coefficient:
        if self.kind == RingKind.CHARACTER:
            if not isinstance(obj, list) or len(obj) != 2:
                raise SeriesError(f"Character coefficient must be [a, b], got {obj!r}")
            return CharElement(_decode_fraction(obj[0]), _decode_fraction(obj[1]))
        if self.kind == RingKind.PRIME_FIELD:
            return self.coerce(int(obj))
        return _decode_fraction(obj)

    def format(self, x: Coefficient) -> str:
        if isinstance(x, Fraction):
            return _format_fraction(x)
        return str(x)


RATIONALS = CoefficientRing.rationals()
CHARACTER_RING = CoefficientRing.character()


def _format_terms(ring: CoefficientRing, coeffs: Sequence[Coefficient], var: str = "t") -> str:
    parts: List[str] = []
    for k, c in enumerate(coeffs):
        if ring.is_zero(c):
            continue
        text = ring.format(c)
        negative = text.startswith("-")
        magnitude = text[1:] if negative else text
        if k == 0:
            term = magnitude
        else:
            power = var if k == 1 else f"{var}^{k}"
            term = power if magnitude == "1" else f"{magnitude}{power}"
        if not parts:
            parts.append(f"-{term}" if negative else term)
        else:
            parts.append(f"- {term}" if negative else f"+ {term}")
    return " ".join(parts) if parts else "0"


@dataclass(frozen=True)
class TruncatedSeries:
    """
    Power series in t known exactly up to degree trunc.

    Coefficients are stored densely, c_0 .. c_trunc. Binary operations on series
    with different truncations use the smaller one.
    """
    ring: CoefficientRing
    trunc: int
    coeffs: Tuple[Coefficient, ...]

    def __post_init__(self):
        if not isinstance(self.trunc, int) or self.trunc < 0:
            raise SeriesError(f"Truncation degree must be a non-negative integer, got {self.trunc!r}")
        values = [self.ring.coerce(c) for c in list(self.coeffs)[: self.trunc + 1]]
        values.extend([self.ring.zero()] * (self.trunc + 1 - len(values)))
        object.__setattr__(self, "coeffs", tuple(values))

    # -------------------------------------------------------------------------
    # Constructors
    # -------------------------------------------------------------------------

    @classmethod
    def zero(cls, ring: CoefficientRing, trunc: int) -> "TruncatedSeries":
        return cls(ring, trunc, ())

    @classmethod
    def one(cls, ring: CoefficientRing, trunc: int) -> "TruncatedSeries":
        return cls(ring, trunc, (1,))

    @classmethod
    def monomial(cls, ring: CoefficientRing, trunc: int, degree: int, coeff: Coefficient = 1) -> "TruncatedSeries":
        values: List[Coefficient] = [0] * (trunc + 1)
        if 0 <= degree <= trunc:
            values[degree] = coeff
        return cls(ring, trunc, tuple(values))

    @classmethod
    def from_coefficients(
        cls, ring: CoefficientRing, coeffs: Iterable[Coefficient], trunc: Optional[int] = None
    ) -> "TruncatedSeries":
        values = list(coeffs)
        if trunc is None:
            trunc = max(len(values) - 1, 0)
        return cls(ring, trunc, tuple(values))

    # -------------------------------------------------------------------------
    # Access
    # -------------------------------------------------------------------------

    def coefficient(self, k: int) -> Coefficient:
        if k < 0:
            return self.ring.zero()
        if k > self.trunc:
            raise SeriesError(f"Coefficient of t^{k} is beyond the truncation degree {self.trunc}")
        return self.coeffs[k]

    def __getitem__(self, k: int) -> Coefficient:
        return self.coefficient(k)

    def is_zero(self) -> bool:
        return all(self.ring.is_zero(c) for c in self.coeffs)

    def truncate(self, trunc: int) -> "TruncatedSeries":
        if trunc > self.trunc:
            raise SeriesError(f"Cannot extend truncation from {self.trunc} to {trunc}")
        return TruncatedSeries(self.ring, trunc, self.coeffs[: trunc + 1])

    def first_nonzero_degree(self) -> Optional[int]:
        for k, c in enumerate(self.coeffs):
            if not self.ring.is_zero(c):
                return k
        return None

    def first_difference(self, other: Any) -> Optional[int]:
        """Lowest degree, up to the common truncation, where the two series differ."""
        return (self - self._lift(other)).first_nonzero_degree()

    # -------------------------------------------------------------------------
    # Arithmetic
    # -------------------------------------------------------------------------

    def _lift(self, other: Any) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            if other.ring != self.ring:
                raise RingMismatchError(f"Ring mismatch: {self.ring.name} vs {other.ring.name}")
            return other
        if isinstance(other, PoincarePolynomial):
            if other.ring != self.ring:
                raise RingMismatchError(f"Ring mismatch: {self.ring.name} vs {other.ring.name}")
            return other.to_series(self.trunc)
        return TruncatedSeries(self.ring, self.trunc, (other,))

    def __add__(self, other: Any) -> "TruncatedSeries":
        other = self._lift(other)
        trunc = min(self.trunc, other.trunc)
        ring = self.ring
        return TruncatedSeries(
            ring, trunc, tuple(ring.add(self.coeffs[k], other.coeffs[k]) for k in range(trunc + 1))
        )

    __radd__ = __add__

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(self.ring, self.trunc, tuple(self.ring.neg(c) for c in self.coeffs))

    def __sub__(self, other: Any) -> "TruncatedSeries":
        return self + (-self._lift(other))

    def __rsub__(self, other: Any) -> "TruncatedSeries":
        return self._lift(other) - self

    def __mul__(self, other: Any) -> "TruncatedSeries":
        if isinstance(other, (TruncatedSeries, PoincarePolynomial)):
            return series_mul(self, self._lift(other))
        return self.scale(other)

    def __rmul__(self, other: Any) -> "TruncatedSeries":
        return self.scale(other)

    def __truediv__(self, other: Any) -> "TruncatedSeries":
        if isinstance(other, (TruncatedSeries, PoincarePolynomial)):
            return series_div(self, self._lift(other))
        return self.scale(self.ring.inv(self.ring.coerce(other)))

    def __pow__(self, n: int) -> "TruncatedSeries":
        if n < 0:
            return TruncatedSeries.one(self.ring, self.trunc) / self ** (-n)
        result = TruncatedSeries.one(self.ring, self.trunc)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, value: Coefficient) -> "TruncatedSeries":
        c = self.ring.coerce(value)
        return TruncatedSeries(self.ring, self.trunc, tuple(self.ring.mul(c, x) for x in self.coeffs))

    def shift(self, k: int) -> "TruncatedSeries":
        """
        Multiply by t^k.

        A negative k divides by t^-k; the low coefficients must vanish and the
        truncation degree drops by -k.
        """
        if k >= 0:
            return TruncatedSeries(self.ring, self.trunc, (0,) * k + self.coeffs)
        drop = -k
        if drop > self.trunc:
            raise SeriesError(f"Cannot divide a series truncated at {self.trunc} by t^{drop}")
        if any(not self.ring.is_zero(c) for c in self.coeffs[:drop]):
            raise NonInvertibleError(f"Series is not divisible by t^{drop}")
        return TruncatedSeries(self.ring, self.trunc - drop, self.coeffs[drop:])

    def map_coefficients(self, ring: CoefficientRing, func) -> "TruncatedSeries":
        return TruncatedSeries(ring, self.trunc, tuple(func(c) for c in self.coeffs))

    # -------------------------------------------------------------------------
    # Serialization
    # -------------------------------------------------------------------------

    def to_dict(self) -> Dict[str, Any]:
        return {
            "ring": self.ring.name,
            "trunc": self.trunc,
            "coeffs": [self.ring.encode(c) for c in self.coeffs],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "TruncatedSeries":
        ring = CoefficientRing.parse(data["ring"])
        return cls(ring, int(data["trunc"]), tuple(ring.decode(c) for c in data["coeffs"]))

    def __str__(self) -> str:
        return f"{_format_terms(self.ring, self.coeffs)} + O(t^{self.trunc + 1})"


@dataclass(frozen=True)
class PoincarePolynomial:
    """Polynomial in t with exact coefficients and no truncation."""
    ring: CoefficientRing
    coeffs: Tuple[Coefficient, ...]

    def __post_init__(self):
        values = [self.ring.coerce(c) for c in self.coeffs]
        while values and self.ring.is_zero(values[-1]):
            values.pop()
        object.__setattr__(self, "coeffs", tuple(values))

    @classmethod
    def from_integers(cls, coeffs: Iterable[int], ring: CoefficientRing = RATIONALS) -> "PoincarePolynomial":
        return cls(ring, tuple(coeffs))

    @classmethod
    def from_series(cls, series: TruncatedSeries) -> "PoincarePolynomial":
        return cls(series.ring, series.coeffs)

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def coefficient(self, k: int) -> Coefficient:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return self.ring.zero()

    def __getitem__(self, k: int) -> Coefficient:
        return self.coefficient(k)

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading_coefficient(self) -> Coefficient:
        if not self.coeffs:
            raise SeriesError("Zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def to_series(self, trunc: int) -> TruncatedSeries:
        return TruncatedSeries(self.ring, trunc, self.coeffs[: trunc + 1])

    def _check(self, other: "PoincarePolynomial") -> None:
        if other.ring != self.ring:
            raise RingMismatchError(f"Ring mismatch: {self.ring.name} vs {other.ring.name}")

    def __add__(self, other: "PoincarePolynomial") -> "PoincarePolynomial":
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return PoincarePolynomial(
            self.ring, tuple(self.ring.add(self.coefficient(k), other.coefficient(k)) for k in range(n))
        )

    def __neg__(self) -> "PoincarePolynomial":
        return PoincarePolynomial(self.ring, tuple(self.ring.neg(c) for c in self.coeffs))

    def __sub__(self, other: "PoincarePolynomial") -> "PoincarePolynomial":
        return self + (-other)

    def __mul__(self, other: Any) -> "PoincarePolynomial":
        if not isinstance(other, PoincarePolynomial):
            c = self.ring.coerce(other)
            return PoincarePolynomial(self.ring, tuple(self.ring.mul(c, x) for x in self.coeffs))
        self._check(other)
        if not self.coeffs or not other.coeffs:
            return PoincarePolynomial(self.ring, ())
        ring = self.ring
        out = [ring.zero()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if ring.is_zero(x):
                continue
            for j, y in enumerate(other.coeffs):
                out[i + j] = ring.add(out[i + j], ring.mul(x, y))
        return PoincarePolynomial(ring, tuple(out))

    __rmul__ = __mul__

    def evaluate(self, x: Coefficient) -> Coefficient:
        return evaluate(self, x)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "ring": self.ring.name,
            "degree": self.degree,
            "coeffs": [self.ring.encode(c) for c in self.coeffs],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "PoincarePolynomial":
        ring = CoefficientRing.parse(data["ring"])
        return cls(ring, tuple(ring.decode(c) for c in data["coeffs"]))

    def __str__(self) -> str:
        return _format_terms(self.ring, self.coeffs)


# =============================================================================
# OPERATIONS
# =============================================================================

Factor = Tuple[Coefficient, int, int]


def series_from_product(factors: Sequence[Factor], ring: CoefficientRing, trunc: int) -> TruncatedSeries:
    """
    Expand a product of factors (1 + s*t^k)^e up to degree trunc.

    Each factor is (s, k, e) with s usually +1 or -1 (any ring element is
    accepted, e.g. chi), k >= 1 and e any integer. Negative exponents expand
    through the generalized binomial series.
    """
    if not isinstance(trunc, int) or trunc < 0:
        raise SeriesError(f"Truncation degree must be a non-negative integer, got {trunc!r}")
    result = TruncatedSeries.one(ring, trunc)
    for sign, k, exponent in factors:
        if not isinstance(k, int) or k < 1:
            raise SeriesError(f"Factor degree must be a positive integer, got {k!r}")
        if not isinstance(exponent, int):
            raise SeriesError(f"Factor exponent must be an integer, got {exponent!r}")
        if exponent == 0:
            continue
        s = ring.coerce(sign)
        values: List[Coefficient] = [ring.zero()] * (trunc + 1)
        max_j = trunc // k
        if exponent > 0:
            max_j = min(max_j, exponent)
        s_power = ring.one()
        for j in range(max_j + 1):
            values[k * j] = ring.mul(ring.coerce(generalized_binomial(exponent, j)), s_power)
            s_power = ring.mul(s_power, s)
        result = series_mul(result, TruncatedSeries(ring, trunc, tuple(values)))
    return result


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated at min(a.trunc, b.trunc)."""
    if a.ring != b.ring:
        raise RingMismatchError(f"Cannot multiply series over {a.ring.name} and {b.ring.name}")
    ring = a.ring
    trunc = min(a.trunc, b.trunc)
    out = [ring.zero()] * (trunc + 1)
    for i in range(trunc + 1):
        x = a.coeffs[i]
        if ring.is_zero(x):
            continue
        for j in range(trunc + 1 - i):
            y = b.coeffs[j]
            if ring.is_zero(y):
                continue
            out[i + j] = ring.add(out[i + j], ring.mul(x, y))
    return TruncatedSeries(ring, trunc, tuple(out))


def series_div(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """a * b^-1 truncated at min(a.trunc, b.trunc); b needs a unit constant term."""
    if a.ring != b.ring:
        raise RingMismatchError(f"Cannot divide series over {a.ring.name} and {b.ring.name}")
    ring = a.ring
    b0 = b.coeffs[0]
    if not ring.is_unit(b0):
        raise NonInvertibleError(
            f"Divisor has non-invertible constant term {ring.format(b0)} in {ring.name}"
        )
    b0_inv = ring.inv(b0)
    trunc = min(a.trunc, b.trunc)
    q: List[Coefficient] = []
    for n in range(trunc + 1):
        acc = a.coeffs[n]
        for i in range(1, n + 1):
            bi = b.coeffs[i]
            if ring.is_zero(bi):
                continue
            acc = ring.sub(acc, ring.mul(bi, q[n - i]))
        q.append(ring.mul(acc, b0_inv))
    return TruncatedSeries(ring, trunc, tuple(q))


def exact_poly_division(
    numerator: PoincarePolynomial, denominator: PoincarePolynomial
) -> Tuple[PoincarePolynomial, PoincarePolynomial]:
    """Long division: numerator = quotient * denominator + remainder, deg(remainder) < deg(denominator)."""
    if numerator.ring != denominator.ring:
        raise RingMismatchError(
            f"Cannot divide polynomials over {numerator.ring.name} and {denominator.ring.name}"
        )
    if denominator.is_zero():
        raise NonInvertibleError("Division by the zero polynomial")
    ring = numerator.ring
    lead_inv = ring.inv(denominator.leading_coefficient())
    d = denominator.degree
    remainder = list(numerator.coeffs)
    quotient = [ring.zero()] * max(len(remainder) - d, 0)
    for k in range(len(remainder) - 1, d - 1, -1):
        c = remainder[k]
        if ring.is_zero(c):
            continue
        factor = ring.mul(c, lead_inv)
        quotient[k - d] = factor
        for i, dc in enumerate(denominator.coeffs):
            remainder[k - d + i] = ring.sub(remainder[k - d + i], ring.mul(factor, dc))
    return PoincarePolynomial(ring, tuple(quotient)), PoincarePolynomial(ring, tuple(remainder[:d]))


def _require_character(series: TruncatedSeries) -> None:
    if series.ring.kind != RingKind.CHARACTER:
        raise RingMismatchError(f"Expected a series over the character ring, got {series.ring.name}")


def char_invariant_part(series: TruncatedSeries) -> TruncatedSeries:
    """Invariant part: a + b*chi maps to a, i.e. half the sum of chi = 1 and chi = -1."""
    _require_character(series)
    return series.map_coefficients(RATIONALS, lambda c: c.a)


def char_anti_invariant_part(series: TruncatedSeries) -> TruncatedSeries:
    """Anti-invariant part: a + b*chi maps to b."""
    _require_character(series)
    return series.map_coefficients(RATIONALS, lambda c: c.b)


def evaluate_character(series: TruncatedSeries, sign: int) -> TruncatedSeries:
    """Specialize chi to +1 or -1."""
    _require_character(series)
    if sign not in (1, -1):
        raise SeriesError(f"chi can only be specialized to +1 or -1, got {sign}")
    return series.map_coefficients(RATIONALS, lambda c: c.at(sign))


def embed_in_character_ring(series: TruncatedSeries) -> TruncatedSeries:
    """View a rational series as a character series with zero chi part."""
    if series.ring.kind != RingKind.RATIONALS:
        raise RingMismatchError(f"Only rational series embed in the character ring, got {series.ring.name}")
    return series.map_coefficients(CHARACTER_RING, lambda c: CharElement(c, 0))


def palindrome_check(p: PoincarePolynomial, dim: int) -> bool:
    """True iff deg(p) <= dim and coefficient(k) = coefficient(dim - k) for all k."""
    if dim < 0:
        raise SeriesError(f"Dimension must be non-negative, got {dim}")
    if p.degree > dim:
        return False
    return all(p.coefficient(k) == p.coefficient(dim - k) for k in range(dim + 1))


def evaluate(p: PoincarePolynomial, x: Coefficient) -> Coefficient:
    """Exact Horner evaluation."""
    ring = p.ring
    point = ring.coerce(x)
    acc = ring.zero()
    for c in reversed(p.coeffs):
        acc = ring.add(ring.mul(acc, point), c)
    return acc
