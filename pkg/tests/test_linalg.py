#!/usr/bin/env python3
# Copyright © 2025 Sierra Labs LLC
# SPDX-License-Identifier: AGPL-3.0-only
# License-Filename: LICENSE

"""Tests for sparse exact rank."""

from fractions import Fraction
from pathlib import Path
import sys

import pytest

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from src.algebra.linalg import matrix_rank, rank_from_row_dicts
from src.algebra.series import CHARACTER_RING, RATIONALS, CoefficientRing, RingMismatchError


TRIANGLE = [{0: 1, 1: 1}, {0: 1, 2: 1}, {1: 1, 2: 1}]


@pytest.mark.parametrize(
    "ring, expected",
    [
        (RATIONALS, 3),
        (CoefficientRing.prime_field(3), 3),
        (CoefficientRing.prime_field(2), 2),
    ],
)
def test_rank_depends_on_characteristic(ring, expected):
    rows = [{c: ring.coerce(v) for c, v in row.items()} for row in TRIANGLE]
    assert matrix_rank(rows, ring) == expected


def test_empty_and_zero_rows():
    assert matrix_rank([], RATIONALS) == 0
    assert matrix_rank([{}, {3: Fraction(0)}], RATIONALS) == 0


def test_pivots_are_normalized():
    rank, pivots = rank_from_row_dicts([{1: Fraction(2), 4: Fraction(6)}], RATIONALS)
    assert rank == 1
    assert pivots == {1: {4: Fraction(3)}}


def test_dependent_rows():
    rows = [{0: Fraction(1), 1: Fraction(2)}, {0: Fraction(2), 1: Fraction(4)}, {2: Fraction(1)}]
    assert matrix_rank(rows, RATIONALS) == 2


def test_character_ring_rejected():
    with pytest.raises(RingMismatchError):
        matrix_rank([{0: CHARACTER_RING.one()}], CHARACTER_RING)
