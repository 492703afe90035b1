#!/usr/bin/env python3
# Copyright © 2025 Sierra Labs LLC
# SPDX-License-Identifier: AGPL-3.0-only
# License-Filename: LICENSE

"""Tests for the truncated series kernel."""

from fractions import Fraction
import random
from pathlib import Path
import sys

import pytest

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from src.algebra.series import (
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
    evaluate,
    evaluate_character,
    exact_poly_division,
    generalized_binomial,
    palindrome_check,
    series_div,
    series_from_product,
    series_mul,
)


def coeffs(series):
    return [series.coefficient(k) for k in range(series.trunc + 1)]


class TestCoefficientRing:
    def test_parse_names(self):
        assert CoefficientRing.parse("Q") == RATIONALS
        assert CoefficientRing.parse("F3") == CoefficientRing.prime_field(3)
        assert CoefficientRing.parse("Q[chi]") == CHARACTER_RING
        assert CoefficientRing.parse("F5").characteristic == 5

    def test_unknown_ring(self):
        with pytest.raises(SeriesError):
            CoefficientRing.parse("Z")

    def test_non_prime_field_rejected(self):
        with pytest.raises(SeriesError):
            CoefficientRing.prime_field(4)

    def test_character_ring_is_not_a_field(self):
        assert not CHARACTER_RING.is_field
        assert RATIONALS.is_field

    def test_prime_field_coerces_fractions(self):
        f3 = CoefficientRing.prime_field(3)
        assert f3.coerce(Fraction(1, 2)) == 2
        with pytest.raises(NonInvertibleError):
            f3.coerce(Fraction(1, 3))

    def test_character_inverse(self):
        inv = CharElement(2, 1).inverse()
        assert inv == CharElement(Fraction(2, 3), Fraction(-1, 3))
        assert CharElement(2, 1) * inv == CharElement(1, 0)

    def test_character_non_unit(self):
        with pytest.raises(NonInvertibleError):
            CharElement(1, -1).inverse()


def test_generalized_binomial():
    assert generalized_binomial(4, 2) == 6
    assert generalized_binomial(2, 3) == 0
    # (1 + x)^-1 = 1 - x + x^2 - ...
    assert [generalized_binomial(-1, j) for j in range(4)] == [1, -1, 1, -1]
    assert [generalized_binomial(-2, j) for j in range(3)] == [1, -2, 3]


class TestTruncatedSeries:
    def test_product_expansion(self):
        series = series_from_product([(1, 1, 2)], RATIONALS, 4)
        assert coeffs(series) == [1, 2, 1, 0, 0]

    def test_negative_exponent(self):
        series = series_from_product([(-1, 1, -1)], RATIONALS, 5)
        assert coeffs(series) == [1] * 6

    def test_division_is_inverse_of_multiplication(self):
        numerator = series_from_product([(1, 1, 3), (1, 2, 2)], RATIONALS, 8)
        denominator = series_from_product([(-1, 1, 1)], RATIONALS, 8)
        assert (numerator * denominator) / denominator == numerator

    def test_function_forms(self):
        a = series_from_product([(1, 1, 2)], RATIONALS, 5)
        b = series_from_product([(-1, 1, 1)], RATIONALS, 3)
        assert series_mul(a, b) == a * b
        assert series_mul(a, b).trunc == 3
        assert coeffs(series_div(a, b)) == [1, 3, 4, 4]

    def test_power_and_negative_power(self):
        x = series_from_product([(-1, 1, 1)], RATIONALS, 6)
        assert x ** 2 == series_from_product([(-1, 1, 2)], RATIONALS, 6)
        assert x ** -1 == series_from_product([(-1, 1, -1)], RATIONALS, 6)

    def test_mixed_truncation_uses_smaller(self):
        a = TruncatedSeries.one(RATIONALS, 3)
        b = TruncatedSeries.one(RATIONALS, 7)
        assert (a + b).trunc == 3
        assert (a * b).trunc == 3

    def test_ring_mismatch(self):
        a = TruncatedSeries.one(RATIONALS, 3)
        b = TruncatedSeries.one(CoefficientRing.prime_field(2), 3)
        with pytest.raises(RingMismatchError):
            a + b

    def test_prime_field_arithmetic(self):
        f2 = CoefficientRing.prime_field(2)
        square = series_from_product([(1, 1, 1)], f2, 4) ** 2
        assert coeffs(square) == [1, 0, 1, 0, 0]

    def test_non_invertible_constant_term(self):
        t = TruncatedSeries.monomial(RATIONALS, 4, 1)
        with pytest.raises(NonInvertibleError):
            TruncatedSeries.one(RATIONALS, 4) / t

    def test_shift(self):
        t = TruncatedSeries.monomial(RATIONALS, 4, 1)
        assert t.shift(2).coefficient(3) == 1
        assert t.shift(-1) == TruncatedSeries.one(RATIONALS, 3)
        with pytest.raises(NonInvertibleError):
            TruncatedSeries.one(RATIONALS, 4).shift(-1)

    def test_coefficient_beyond_truncation(self):
        with pytest.raises(SeriesError):
            TruncatedSeries.one(RATIONALS, 2).coefficient(3)

    def test_negative_truncation(self):
        with pytest.raises(SeriesError):
            TruncatedSeries.zero(RATIONALS, -1)

    def test_first_difference(self):
        a = TruncatedSeries.from_coefficients(RATIONALS, [1, 2, 3])
        b = TruncatedSeries.from_coefficients(RATIONALS, [1, 2, 4])
        assert a.first_difference(b) == 2
        assert a.first_difference(a) is None

    def test_dict_round_trip(self):
        series = TruncatedSeries.from_coefficients(RATIONALS, [1, Fraction(1, 2), -3])
        assert TruncatedSeries.from_dict(series.to_dict()) == series
        assert series.to_dict()["coeffs"] == [1, [1, 2], -3]

    def test_string_form(self):
        series = TruncatedSeries.from_coefficients(RATIONALS, [1, 4, 11])
        assert str(series) == "1 + 4t + 11t^2 + O(t^3)"


class TestPoincarePolynomial:
    def test_exact_division(self):
        numerator = PoincarePolynomial.from_integers([1, 0, -1])
        denominator = PoincarePolynomial.from_integers([1, -1])
        quotient, remainder = exact_poly_division(numerator, denominator)
        assert quotient == PoincarePolynomial.from_integers([1, 1])
        assert remainder.is_zero()

    def test_division_with_remainder(self):
        numerator = PoincarePolynomial.from_integers([2, 0, 1])
        denominator = PoincarePolynomial.from_integers([1, 1])
        quotient, remainder = exact_poly_division(numerator, denominator)
        assert quotient * denominator + remainder == numerator
        assert remainder == PoincarePolynomial.from_integers([3])

    def test_degree_and_evaluation(self):
        p = PoincarePolynomial.from_integers([1, 4, 11, 16, 11, 4, 1, 0, 0])
        assert p.degree == 6
        assert p.evaluate(1) == 48
        assert p.evaluate(-1) == 0

    def test_horner_evaluation(self):
        p = PoincarePolynomial.from_integers([1, 0, 0, 2, 0, 0, 1])
        assert evaluate(p, -1) == 0
        assert evaluate(p, 0) == 1
        assert evaluate(PoincarePolynomial.from_integers([1, 1, 1, 1]), 1) == 4
        assert evaluate(p, Fraction(1, 2)) == Fraction(81, 64)

    def test_palindrome(self):
        p = PoincarePolynomial.from_integers([1, 0, 1, 4, 1, 0, 1])
        assert palindrome_check(p, 6)
        assert not palindrome_check(p, 7)
        assert not palindrome_check(PoincarePolynomial.from_integers([1, 2]), 1)

    def test_string_form(self):
        p = PoincarePolynomial.from_integers([1, -1, 0, 2])
        assert str(p) == "1 - t + 2t^3"


class TestCharacterRing:
    def test_invariant_part(self):
        chi = CHARACTER_RING.chi()
        series = series_from_product([(chi, 1, 2), (chi, 2, 2)], CHARACTER_RING, 6)
        assert coeffs(char_invariant_part(series)) == [1, 0, 1, 4, 1, 0, 1]

    def test_anti_invariant_part(self):
        chi = CHARACTER_RING.chi()
        series = series_from_product([(chi, 1, 2), (chi, 2, 2)], CHARACTER_RING, 6)
        assert coeffs(char_anti_invariant_part(series)) == [0, 2, 2, 0, 2, 2, 0]
        rebuilt = embed_in_character_ring(char_invariant_part(series)) + embed_in_character_ring(
            char_anti_invariant_part(series)
        ) * chi
        assert rebuilt == series

    def test_invariant_part_is_idempotent(self):
        chi = CHARACTER_RING.chi()
        series = series_from_product([(chi, 1, 3), (-chi, 3, 1)], CHARACTER_RING, 7)
        invariant = char_invariant_part(series)
        assert char_invariant_part(embed_in_character_ring(invariant)) == invariant
        assert char_anti_invariant_part(embed_in_character_ring(invariant)).is_zero()

    def test_embedding_requires_rationals(self):
        with pytest.raises(RingMismatchError):
            embed_in_character_ring(TruncatedSeries.one(CoefficientRing.prime_field(3), 2))

    def test_specialization(self):
        chi = CHARACTER_RING.chi()
        series = series_from_product([(chi, 1, 1)], CHARACTER_RING, 2)
        assert coeffs(evaluate_character(series, 1)) == [1, 1, 0]
        assert coeffs(evaluate_character(series, -1)) == [1, -1, 0]

    def test_invariant_part_requires_character_ring(self):
        with pytest.raises(RingMismatchError):
            char_invariant_part(TruncatedSeries.one(RATIONALS, 2))

    def test_chi_only_in_character_ring(self):
        with pytest.raises(RingMismatchError):
            RATIONALS.chi()


# =============================================================================
# Ring axioms over seeded random series
# =============================================================================

AXIOM_RINGS = ["Q", "F2", "F5", "Q[chi]"]
AXIOM_SEEDS = range(6)
AXIOM_TRUNC = 6


def random_coefficient(ring, rng):
    if ring.kind == RingKind.PRIME_FIELD:
        return rng.randrange(ring.p)
    value = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
    if ring.kind == RingKind.CHARACTER:
        return CharElement(value, Fraction(rng.randint(-5, 5), rng.randint(1, 4)))
    return value


def random_series(ring, rng, unit=False):
    values = [random_coefficient(ring, rng) for _ in range(AXIOM_TRUNC + 1)]
    while unit and not ring.is_unit(ring.coerce(values[0])):
        values[0] = random_coefficient(ring, rng)
    return TruncatedSeries(ring, AXIOM_TRUNC, tuple(values))


@pytest.fixture(params=[(name, seed) for name in AXIOM_RINGS for seed in AXIOM_SEEDS], ids=lambda p: f"{p[0]}-{p[1]}")
def triple(request):
    name, seed = request.param
    ring = CoefficientRing.parse(name)
    rng = random.Random(f"{name}:{seed}")
    return ring, random_series(ring, rng), random_series(ring, rng), random_series(ring, rng, unit=True)


class TestRingAxioms:
    def test_commutativity(self, triple):
        _, a, b, c = triple
        assert a + b == b + a
        assert series_mul(a, b) == series_mul(b, a)

    def test_associativity(self, triple):
        _, a, b, c = triple
        assert (a + b) + c == a + (b + c)
        assert series_mul(series_mul(a, b), c) == series_mul(a, series_mul(b, c))

    def test_distributivity(self, triple):
        _, a, b, c = triple
        assert a * (b + c) == a * b + a * c
        assert (a + b) * c == a * c + b * c

    def test_units(self, triple):
        ring, a, _, _ = triple
        assert a * TruncatedSeries.one(ring, AXIOM_TRUNC) == a
        assert a + TruncatedSeries.zero(ring, AXIOM_TRUNC) == a
        assert (a - a).is_zero()

    def test_division_undoes_multiplication(self, triple):
        _, a, b, c = triple
        assert series_div(series_mul(a, c), c) == a
        assert series_mul(series_div(b, c), c) == b
        assert c ** -1 * c == TruncatedSeries.one(c.ring, AXIOM_TRUNC)
