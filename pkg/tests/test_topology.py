#!/usr/bin/env python3
# Copyright © 2025 Sierra Labs LLC
# SPDX-License-Identifier: AGPL-3.0-only
# License-Filename: LICENSE

"""Tests for real curve and Real bundle topological types."""

from pathlib import Path
import sys

import pytest

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from src.moduli.topology import (
    QuaternionicComponentError,
    RealCurveType,
    TopologyError,
    bundle_from_counts,
    enumerate_curves,
    moduli_dimension,
    quotient_surface,
    smallest_coprime_degree,
    stable_range,
    validate_bundle,
    validate_curve,
)


class TestCurves:
    def test_enumerate_genus_two(self):
        curves = [(c.g, c.a, c.eps) for c in enumerate_curves(2)]
        assert curves == [(2, 0, 1), (2, 1, 1), (2, 2, 1), (2, 1, 0), (2, 3, 0)]

    def test_enumerate_genus_zero(self):
        curves = [(c.g, c.a, c.eps) for c in enumerate_curves(0)]
        assert curves == [(0, 0, 1), (0, 1, 0)]

    def test_every_enumerated_curve_validates(self):
        for g in range(0, 7):
            for curve in enumerate_curves(g):
                assert validate_curve(curve.g, curve.a, curve.eps) == curve

    @pytest.mark.parametrize(
        "g, a, eps",
        [
            (2, 0, 0),   # a >= 1 - eps
            (2, 3, 1),   # a <= g + 1 - eps
            (2, 2, 0),   # parity
            (-1, 0, 1),
            (2, 1, 2),
        ],
    )
    def test_invalid_curves(self, g, a, eps):
        with pytest.raises(TopologyError):
            validate_curve(g, a, eps)

    def test_non_integer_rejected(self):
        with pytest.raises(TopologyError):
            validate_curve(2.0, 1, 1)

    def test_from_dict(self):
        assert RealCurveType.from_dict({"g": 3, "a": 2, "eps": 0}) == RealCurveType(3, 2, 0)


class TestBundles:
    def test_counts(self):
        curve = validate_curve(3, 4, 0)
        bundle = validate_bundle(curve, 2, 1, [1, 0, 0, 0])
        assert (bundle.b, bundle.c) == (1, 3)
        assert bundle.coprime

    def test_degree_parity(self):
        curve = validate_curve(3, 2, 0)
        with pytest.raises(TopologyError):
            validate_bundle(curve, 2, 2, [1, 0])

    def test_class_count_must_match_circles(self):
        curve = validate_curve(3, 2, 0)
        with pytest.raises(TopologyError):
            validate_bundle(curve, 2, 1, [1])

    def test_quaternionic_component(self):
        curve = validate_curve(3, 2, 0)
        with pytest.raises(QuaternionicComponentError):
            validate_bundle(curve, 2, 1, [1, 0], component="quaternionic")

    def test_from_counts(self):
        curve = validate_curve(3, 2, 1)
        bundle = bundle_from_counts(curve, 3, 2, 0)
        assert bundle.circle_classes == (0, 0)
        assert bundle.summary()["gcd"] == 1
        with pytest.raises(TopologyError):
            bundle_from_counts(curve, 3, 2, 3)

    def test_non_coprime(self):
        curve = validate_curve(3, 2, 1)
        assert not bundle_from_counts(curve, 2, 2, 0).coprime


def test_smallest_coprime_degree():
    assert smallest_coprime_degree(3, 0) == 2
    assert smallest_coprime_degree(3, 1) == 1
    assert smallest_coprime_degree(15, 0) == 2
    assert smallest_coprime_degree(2, 1) == 1
    with pytest.raises(TopologyError):
        smallest_coprime_degree(4, 0)


@pytest.mark.parametrize(
    "curve, expected",
    [
        ((2, 0, 1), (1, 1)),
        ((2, 1, 1), (0, 3)),
        ((2, 3, 0), (0, 3)),
        ((3, 2, 0), (1, 2)),
    ],
)
def test_quotient_surface(curve, expected):
    assert quotient_surface(validate_curve(*curve)) == expected


def test_quotient_surface_genus_relation():
    for g in range(0, 8):
        for curve in enumerate_curves(g):
            ghat, n = quotient_surface(curve)
            assert 2 * ghat + n - 1 == g


def test_dimensions():
    assert stable_range(2, 6) == 4
    assert moduli_dimension(2, 3) == 6
    assert moduli_dimension(3, 2) == 8
    with pytest.raises(TopologyError):
        stable_range(2, 1)
