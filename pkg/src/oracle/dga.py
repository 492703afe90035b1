# Copyright © 2025 Sierra Labs LLC
# SPDX-License-Identifier: AGPL-3.0-only
# License-Filename: LICENSE

"""
Brute-force homology of bigraded differential graded-commutative algebras.

A PresentedDGA is free on exterior, polynomial and divided power generators
with bidegree (column s <= 0, internal degree q >= 1). Monomials are exponent
vectors aligned with the generator list; for divided power generators the
exponent d stands for z^[d]. Signs follow the Koszul rule on total degree
s + q. Homology is computed one (q, chi) block at a time by exact sparse
elimination.
"""

import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple, Union

from ..algebra.linalg import matrix_rank
from ..algebra.series import (
    CHARACTER_RING,
    RATIONALS,
    CharElement,
    Coefficient,
    CoefficientRing,
    RingKind,
    RingMismatchError,
    TruncatedSeries,
)

logger = logging.getLogger(__name__)

DEFAULT_BASIS_LIMIT = 1_000_000

Monomial = Tuple[int, ...]
MonomialSpec = Tuple[Tuple[str, int], ...]
DifferentialTerm = Tuple[int, MonomialSpec]
LinearCombination = Dict[Monomial, Coefficient]


class OracleError(RuntimeError):
    """Base exception for oracle failures."""
    pass


class BasisLimitExceeded(OracleError):
    """Monomial basis grew past the configured limit."""
    pass


class DifferentialError(OracleError):
    """A differential violates d^2 = 0, the bidegree rule or the chi-weight rule."""
    pass


class ComplexParameterError(ValueError):
    """Invalid generator data or complex parameters."""
    pass


class Flavor(str, Enum):
    """How a generator multiplies with itself."""
    EXTERIOR = "exterior"
    POLYNOMIAL = "polynomial"
    DIVIDED_POWER = "divided_power"


def term(coeff: int, *factors: Union[str, Tuple[str, int]]) -> DifferentialTerm:
    """Build a differential term, e.g. term(2, "ebar_2", "e_2") or term(1, ("p_1", 2))."""
    parts = []
    for factor in factors:
        if isinstance(factor, str):
            parts.append((factor, 1))
        else:
            parts.append((factor[0], int(factor[1])))
    return coeff, tuple(parts)


@dataclass(frozen=True)
class Generator:
    name: str
    column: int
    degree: int
    flavor: Flavor
    chi_weight: int = 0
    differential: Tuple[DifferentialTerm, ...] = ()

    @property
    def total_degree(self) -> int:
        return self.column + self.degree

    @property
    def odd(self) -> bool:
        return self.total_degree % 2 == 1

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "bidegree": [self.column, self.degree],
            "flavor": self.flavor.value,
            "chi": self.chi_weight,
            "differential": [
                {"coeff": coeff, "monomial": {name: exp for name, exp in mono}}
                for coeff, mono in self.differential
            ],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Generator":
        column, degree = data["bidegree"]
        differential = tuple(
            (int(t["coeff"]), tuple((name, int(exp)) for name, exp in t["monomial"].items()))
            for t in data.get("differential", [])
        )
        return cls(
            name=data["name"],
            column=int(column),
            degree=int(degree),
            flavor=Flavor(data["flavor"]),
            chi_weight=int(data.get("chi", 0)),
            differential=differential,
        )


class PresentedDGA:
    """
    Free bigraded dga with a differential given on generators.

    cap is the largest internal degree the algebra will be enumerated to.
    """

    def __init__(
        self,
        generators: Sequence[Generator],
        ring: CoefficientRing,
        cap: int,
        basis_limit: int = DEFAULT_BASIS_LIMIT,
        name: str = "dga",
    ):
        if not ring.is_field:
            raise RingMismatchError(f"Oracle homology needs a field, got {ring.name}")
        if cap < 0:
            raise ComplexParameterError(f"degree cap must be non-negative, got {cap}")
        self.generators: Tuple[Generator, ...] = tuple(generators)
        self.ring = ring
        self.cap = cap
        self.basis_limit = basis_limit
        self.name = name
        self._index: Dict[str, int] = {}
        for i, gen in enumerate(self.generators):
            if gen.name in self._index:
                raise ComplexParameterError(f"duplicate generator name '{gen.name}'")
            self._index[gen.name] = i
        for gen in self.generators:
            self._validate_generator(gen)
        self._parity = tuple(1 if gen.odd else 0 for gen in self.generators)
        self._diffs: List[LinearCombination] = [self._parse_differential(gen) for gen in self.generators]
        self._d_cache: Dict[Monomial, LinearCombination] = {}

    def __len__(self) -> int:
        return len(self.generators)

    def __repr__(self) -> str:
        return f"PresentedDGA({self.name}, {len(self.generators)} generators over {self.ring.name}, cap={self.cap})"

    # -------------------------------------------------------------------------
    # Validation
    # -------------------------------------------------------------------------

    def _validate_generator(self, gen: Generator) -> None:
        if gen.degree < 1:
            raise ComplexParameterError(f"{gen.name}: internal degree must be positive, got {gen.degree}")
        if gen.column > 0:
            raise ComplexParameterError(f"{gen.name}: column must be <= 0, got {gen.column}")
        if gen.total_degree < 1:
            raise ComplexParameterError(f"{gen.name}: total degree must be positive, got {gen.total_degree}")
        if gen.chi_weight not in (0, 1):
            raise ComplexParameterError(f"{gen.name}: chi weight must be 0 or 1, got {gen.chi_weight}")
        if gen.odd and gen.flavor != Flavor.EXTERIOR and self.ring.characteristic != 2:
            raise ComplexParameterError(f"{gen.name}: odd total degree requires the exterior flavor")

    def _parse_differential(self, gen: Generator) -> LinearCombination:
        result: LinearCombination = {}
        for coeff, spec in gen.differential:
            mono = self.monomial(spec)
            if self.column(mono) != gen.column + 1:
                raise DifferentialError(f"d({gen.name}) term {dict(spec)} is not in column {gen.column + 1}")
            if self.internal_degree(mono) != gen.degree:
                raise DifferentialError(f"d({gen.name}) term {dict(spec)} has internal degree {self.internal_degree(mono)}, expected {gen.degree}")
            if self.chi(mono) != gen.chi_weight:
                raise DifferentialError(f"d({gen.name}) term {dict(spec)} changes the chi weight")
            value = self.ring.add(result.get(mono, self.ring.zero()), self.ring.coerce(coeff))
            if self.ring.is_zero(value):
                result.pop(mono, None)
            else:
                result[mono] = value
        return result

    # -------------------------------------------------------------------------
    # Monomials
    # -------------------------------------------------------------------------

    def monomial(self, spec: Union[MonomialSpec, Dict[str, int]]) -> Monomial:
        exps = [0] * len(self.generators)
        items = spec.items() if isinstance(spec, dict) else spec
        for name, exp in items:
            if name not in self._index:
                raise ComplexParameterError(f"unknown generator '{name}'")
            i = self._index[name]
            if self.generators[i].flavor == Flavor.EXTERIOR and exp > 1:
                raise ComplexParameterError(f"exterior generator '{name}' cannot have exponent {exp}")
            exps[i] += exp
        return tuple(exps)

    def internal_degree(self, mono: Monomial) -> int:
        return sum(e * gen.degree for e, gen in zip(mono, self.generators))

    def column(self, mono: Monomial) -> int:
        return sum(e * gen.column for e, gen in zip(mono, self.generators))

    def total_degree(self, mono: Monomial) -> int:
        return self.column(mono) + self.internal_degree(mono)

    def chi(self, mono: Monomial) -> int:
        return sum(e * gen.chi_weight for e, gen in zip(mono, self.generators)) % 2

    def describe(self, mono: Monomial) -> str:
        parts = []
        for e, gen in zip(mono, self.generators):
            if e == 0:
                continue
            if e == 1:
                parts.append(gen.name)
            elif gen.flavor == Flavor.DIVIDED_POWER:
                parts.append(f"{gen.name}^[{e}]")
            else:
                parts.append(f"{gen.name}^{e}")
        return "*".join(parts) if parts else "1"

    def multiply(self, left: Monomial, right: Monomial) -> Optional[Tuple[int, Monomial]]:
        """Product of two monomials as (integer coefficient, monomial), or None when it vanishes."""
        coeff = 1
        out = []
        for e1, e2, gen in zip(left, right, self.generators):
            if e1 and e2:
                if gen.flavor == Flavor.EXTERIOR:
                    return None
                if gen.flavor == Flavor.DIVIDED_POWER:
                    coeff *= math.comb(e1 + e2, e1)
            out.append(e1 + e2)
        # Koszul sign: each odd factor of right moves past the odd factors of left with larger index
        swaps = 0
        odd_after = 0
        for j in range(len(self.generators) - 1, -1, -1):
            if self._parity[j] and right[j] % 2:
                swaps += odd_after
            if self._parity[j] and left[j] % 2:
                odd_after += 1
        if swaps % 2:
            coeff = -coeff
        return coeff, tuple(out)

    # -------------------------------------------------------------------------
    # Differential
    # -------------------------------------------------------------------------

    def differential(self, mono: Monomial) -> LinearCombination:
        """Leibniz extension of the generator differentials to a monomial."""
        cached = self._d_cache.get(mono)
        if cached is not None:
            return cached
        ring = self.ring
        n = len(self.generators)
        result: LinearCombination = {}
        prefix_degree = 0
        for i, e in enumerate(mono):
            if e == 0:
                continue
            gen = self.generators[i]
            d_gen = self._diffs[i]
            if d_gen:
                prefix = mono[:i] + (0,) * (n - i)
                suffix = (0,) * (i + 1) + mono[i + 1:]
                rest = (0,) * i + (e - 1,) + (0,) * (n - i - 1)
                scale = e if gen.flavor == Flavor.POLYNOMIAL else 1
                if prefix_degree % 2:
                    scale = -scale
                for target, c in d_gen.items():
                    step = self.multiply(target, rest)
                    if step is None:
                        continue
                    step2 = self.multiply(prefix, step[1])
                    if step2 is None:
                        continue
                    step3 = self.multiply(step2[1], suffix)
                    if step3 is None:
                        continue
                    factor = ring.coerce(scale * step[0] * step2[0] * step3[0])
                    value = ring.add(result.get(step3[1], ring.zero()), ring.mul(factor, c))
                    if ring.is_zero(value):
                        result.pop(step3[1], None)
                    else:
                        result[step3[1]] = value
            prefix_degree += e * gen.total_degree
        self._d_cache[mono] = result
        return result

    def apply(self, combination: LinearCombination) -> LinearCombination:
        ring = self.ring
        result: LinearCombination = {}
        for mono, c in combination.items():
            for target, v in self.differential(mono).items():
                value = ring.add(result.get(target, ring.zero()), ring.mul(c, v))
                if ring.is_zero(value):
                    result.pop(target, None)
                else:
                    result[target] = value
        return result

    # -------------------------------------------------------------------------
    # Serialization
    # -------------------------------------------------------------------------

    def to_manifest(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "ring": self.ring.name,
            "cap": self.cap,
            "generators": [gen.to_dict() for gen in self.generators],
        }

    @classmethod
    def from_manifest(cls, data: Dict[str, Any], basis_limit: int = DEFAULT_BASIS_LIMIT) -> "PresentedDGA":
        return cls(
            [Generator.from_dict(g) for g in data["generators"]],
            CoefficientRing.parse(data["ring"]),
            int(data["cap"]),
            basis_limit=basis_limit,
            name=data.get("name", "dga"),
        )


def with_differential(dga: PresentedDGA, name: str, terms: Iterable[DifferentialTerm]) -> PresentedDGA:
    """Copy of dga with the differential of one generator replaced."""
    if name not in {gen.name for gen in dga.generators}:
        raise ComplexParameterError(f"unknown generator '{name}'")
    generators = [
        Generator(g.name, g.column, g.degree, g.flavor, g.chi_weight, tuple(terms)) if g.name == name else g
        for g in dga.generators
    ]
    return PresentedDGA(generators, dga.ring, dga.cap, dga.basis_limit, name=f"{dga.name}[{name} modified]")


# =============================================================================
# Basis enumeration
# =============================================================================

def enumerate_basis(dga: PresentedDGA, D: Optional[int] = None) -> List[Monomial]:
    """All monomials of internal degree <= D, in lexicographic exponent order."""
    if D is None:
        D = dga.cap
    if D > dga.cap:
        raise ComplexParameterError(f"degree {D} exceeds the cap {dga.cap} of {dga.name}")
    gens = dga.generators
    basis: List[Monomial] = []
    current = [0] * len(gens)

    def visit(i: int, remaining: int) -> None:
        if i == len(gens):
            basis.append(tuple(current))
            if len(basis) > dga.basis_limit:
                raise BasisLimitExceeded(f"{dga.name}: basis exceeds {dga.basis_limit} monomials at degree cap {D}")
            return
        gen = gens[i]
        top = remaining // gen.degree
        if gen.flavor == Flavor.EXTERIOR:
            top = min(top, 1)
        for e in range(top + 1):
            current[i] = e
            visit(i + 1, remaining - e * gen.degree)
        current[i] = 0

    visit(0, D)
    logger.debug(f"{dga.name}: {len(basis)} monomials up to internal degree {D}")
    return basis


def check_square_zero(dga: PresentedDGA, basis: Iterable[Monomial]) -> None:
    for mono in basis:
        dd = dga.apply(dga.differential(mono))
        if dd:
            raise DifferentialError(f"{dga.name}: d^2({dga.describe(mono)}) != 0")


# =============================================================================
# Homology
# =============================================================================

def degree_ratio(dga: PresentedDGA) -> Fraction:
    """Largest (-s)/(s+q) over negative column generators; 0 when there are none."""
    ratios = [Fraction(-g.column, g.total_degree) for g in dga.generators if g.column < 0]
    return max(ratios, default=Fraction(0))


def internal_cap_for_total(dga: PresentedDGA, D: int) -> int:
    """Internal degree cap under which every monomial of total degree <= D is enumerated."""
    return math.ceil(D * (1 + degree_ratio(dga)))


@dataclass
class HilbertTable:
    """Homology dimensions keyed by (column, internal degree, chi)."""
    dims: Dict[Tuple[int, int, int], int]
    internal_cap: int
    total_cap: int
    ring_name: str = "Q"

    def dimension(self, column: int, degree: int, chi: Optional[int] = None) -> int:
        if chi is None:
            return self.dims.get((column, degree, 0), 0) + self.dims.get((column, degree, 1), 0)
        return self.dims.get((column, degree, chi), 0)

    def _collapse(self, chi: Optional[int]) -> List[int]:
        values = [0] * (self.total_cap + 1)
        for (s, q, w), dim in self.dims.items():
            total = s + q
            if total <= self.total_cap and (chi is None or w == chi):
                values[total] += dim
        return values

    def total_series(self) -> TruncatedSeries:
        return TruncatedSeries(RATIONALS, self.total_cap, tuple(self._collapse(None)))

    def invariant_series(self) -> TruncatedSeries:
        return TruncatedSeries(RATIONALS, self.total_cap, tuple(self._collapse(0)))

    def character_series(self) -> TruncatedSeries:
        even, odd = self._collapse(0), self._collapse(1)
        return TruncatedSeries(CHARACTER_RING, self.total_cap, tuple(CharElement(x, y) for x, y in zip(even, odd)))

    def column_series(self, column: int, shift: int = 0) -> TruncatedSeries:
        """Internal degree series of one column, with t^shift divided out."""
        trunc = self.internal_cap - shift
        if trunc < 0:
            raise ComplexParameterError(f"shift {shift} exceeds the internal cap {self.internal_cap}")
        values = [0] * (trunc + 1)
        for (s, q, _), dim in self.dims.items():
            if s == column and 0 <= q - shift <= trunc:
                values[q - shift] += dim
        return TruncatedSeries(RATIONALS, trunc, tuple(values))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "ring": self.ring_name,
            "internal_cap": self.internal_cap,
            "total_cap": self.total_cap,
            "dims": [
                {"column": s, "degree": q, "chi": w, "dim": d}
                for (s, q, w), d in sorted(self.dims.items())
                if d
            ],
        }


def homology_hilbert(
    dga: PresentedDGA, D: Optional[int] = None, check: bool = True, total: Optional[int] = None
) -> HilbertTable:
    """
    Homology dimensions of dga in every (column, internal degree, chi) slot up to D.

    Passing total instead of D picks the smallest internal cap that completes
    every total degree <= total.

    d preserves internal degree and chi and raises the column by one, so each
    (q, chi) block is a finite cochain complex in the column grading.
    """
    if D is None:
        D = dga.cap if total is None else internal_cap_for_total(dga, total)
    basis = enumerate_basis(dga, D)
    if check:
        check_square_zero(dga, basis)

    blocks: Dict[Tuple[int, int], Dict[int, List[Monomial]]] = {}
    for mono in basis:
        key = (dga.internal_degree(mono), dga.chi(mono))
        blocks.setdefault(key, {}).setdefault(dga.column(mono), []).append(mono)

    dims: Dict[Tuple[int, int, int], int] = {}
    for (q, w), columns in sorted(blocks.items()):
        ranks: Dict[int, int] = {}
        for s, monos in columns.items():
            targets = {mono: idx for idx, mono in enumerate(columns.get(s + 1, []))}
            rows = []
            for mono in monos:
                image = dga.differential(mono)
                rows.append({targets[t]: c for t, c in image.items()})
            ranks[s] = matrix_rank(rows, dga.ring) if targets else 0
        for s, monos in columns.items():
            dim = len(monos) - ranks[s] - ranks.get(s - 1, 0)
            if dim < 0:
                raise DifferentialError(f"{dga.name}: negative homology dimension at ({s}, {q}, {w})")
            if dim:
                dims[(s, q, w)] = dim

    total_cap = math.floor(Fraction(D) / (1 + degree_ratio(dga)))
    logger.info(f"{dga.name}: homology over {dga.ring.name} up to internal degree {D} (total {total_cap})")
    return HilbertTable(dims, D, total_cap, dga.ring.name)


# =============================================================================
# Comparison
# =============================================================================

@dataclass
class Comparison:
    """Outcome of comparing a computed series with a closed form."""
    match: bool
    checked_up_to: int
    degree: Optional[int] = None
    expected: Optional[str] = None
    actual: Optional[str] = None
    details: Dict[str, Any] = field(default_factory=dict)

    def summary(self) -> str:
        if self.match:
            return f"match ≤ {self.checked_up_to}"
        return f"mismatch at t^{self.degree}: expected {self.expected}, got {self.actual}"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "match": self.match,
            "checked_up_to": self.checked_up_to,
            "degree": self.degree,
            "expected": self.expected,
            "actual": self.actual,
        }


def compare_series(actual: TruncatedSeries, expected: TruncatedSeries, D: int) -> Comparison:
    """First degree <= D where the two series differ."""
    if actual.ring != expected.ring:
        raise RingMismatchError(f"Cannot compare series over {actual.ring.name} and {expected.ring.name}")
    limit = min(D, actual.trunc, expected.trunc)
    for k in range(limit + 1):
        if actual.coeffs[k] != expected.coeffs[k]:
            ring = actual.ring
            return Comparison(False, limit, k, ring.format(expected.coeffs[k]), ring.format(actual.coeffs[k]))
    return Comparison(True, limit)


def compare_hilbert(table: HilbertTable, closed_form: TruncatedSeries, D: int, project_chi: bool = False) -> Comparison:
    """
    Compare the total degree homology series with a closed form.

    A closed form over the character ring is compared with the chi-graded
    series; otherwise project_chi selects the chi-invariant part.
    """
    if closed_form.ring.kind == RingKind.CHARACTER:
        actual = table.character_series()
    elif project_chi:
        actual = table.invariant_series()
    else:
        actual = table.total_series()
    return compare_series(actual, closed_form, D)
