#!/usr/bin/env python3
# Copyright © 2025 Sierra Labs LLC
# SPDX-License-Identifier: AGPL-3.0-only
# License-Filename: LICENSE

"""Tests for gauge component groups and fundamental groups."""

from pathlib import Path
import sys

import pytest

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from src.moduli.groups import (
    FGAbelianGroup,
    GroupDescriptor,
    GroupKind,
    UnsupportedCaseError,
    abelianize,
    group_table,
    h1_fixed_det_moduli,
    pi0_cgauge,
    pi0_sgauge,
    pi1_fixed_det_moduli,
)
from src.moduli.topology import TopologyError


class TestFGAbelianGroup:
    def test_mod2_rank(self):
        group = FGAbelianGroup(1, (2, 3, 2))
        assert group.mod2_rank == 3
        assert group.torsion == (2, 2, 3)

    def test_string_form(self):
        assert str(FGAbelianGroup.z2_power(2)) == "(Z/2)^2"
        assert str(FGAbelianGroup(1, (2, 2, 3))) == "(Z/2)^2 × Z/3 × Z"
        assert str(FGAbelianGroup()) == "trivial"

    def test_remove_z2(self):
        assert FGAbelianGroup.z2_power(3).remove_z2() == FGAbelianGroup.z2_power(2)
        with pytest.raises(ValueError):
            FGAbelianGroup(2).remove_z2()

    def test_invalid(self):
        with pytest.raises(ValueError):
            FGAbelianGroup(-1)
        with pytest.raises(ValueError):
            FGAbelianGroup(0, (1,))


class TestGroupDescriptor:
    def test_default_action_is_trivial(self):
        gd = GroupDescriptor(2, 1)
        assert gd.action == (1, 1, 1)
        assert gd.kind == GroupKind.DIRECT

    def test_z2_factors_need_trivial_action(self):
        with pytest.raises(ValueError):
            GroupDescriptor(1, 0, (-1,))

    def test_action_length(self):
        with pytest.raises(ValueError):
            GroupDescriptor(1, 1, (1,))


class TestGaugeGroups:
    def test_rank_two(self):
        assert pi0_sgauge(2, 3, 1) == FGAbelianGroup.z2_power(1, 2)
        gd = pi0_cgauge(2, 3, 1)
        assert gd.action == (1, -1, -1)
        assert gd.kind == GroupKind.SEMIDIRECT

    def test_higher_rank(self):
        assert pi0_sgauge(3, 3, 1) == FGAbelianGroup.z2_power(3)
        assert pi0_cgauge(4, 2, 0).kind == GroupKind.DIRECT

    def test_invalid_counts(self):
        with pytest.raises(ValueError):
            pi0_sgauge(2, 1, 2)
        with pytest.raises(ValueError):
            pi0_sgauge(1, 1, 0)


class TestFundamentalGroup:
    def test_rank_two_semidirect(self):
        pi1 = pi1_fixed_det_moduli(2, 3, 2, 1)
        assert str(pi1) == "Z/2 ⋉ (Z/2 × Z)"
        assert pi1.to_dict() == {"kind": "semidirect", "base": {"z2": 1, "z": 1}, "action": [1, -1]}
        assert abelianize(pi1).torsion_count == 3
        assert str(h1_fixed_det_moduli(2, 3, 2, 1)) == "(Z/2)^2"

    def test_rank_two_all_odd_is_direct(self):
        assert str(pi1_fixed_det_moduli(2, 3, 2, 2)) == "Z/2 × (Z/2)^2"

    def test_rank_two_single_even_circle(self):
        assert str(pi1_fixed_det_moduli(2, 3, 1, 0)) == "Z/2 ⋉ Z"

    def test_rank_three(self):
        assert str(pi1_fixed_det_moduli(3, 3, 2, 1)) == "Z/2 × (Z/2)^2"
        assert str(pi1_fixed_det_moduli(3, 3, 0, 0)) == "Z/2"

    @pytest.mark.parametrize("r", [2, 3, 4])
    def test_h1_has_a_z2_summands(self, r):
        for a in range(0, 5):
            for b in range(0, a + 1):
                assert h1_fixed_det_moduli(r, 3, a, b) == FGAbelianGroup.z2_power(a)

    def test_rank_two_genus_two_unsupported(self):
        with pytest.raises(UnsupportedCaseError):
            pi1_fixed_det_moduli(2, 2, 1, 1)

    def test_genus_one_rejected(self):
        with pytest.raises(ValueError):
            pi1_fixed_det_moduli(3, 1, 1, 1)

    @pytest.mark.parametrize("r", [2, 3])
    def test_too_many_circles_rejected(self, r):
        with pytest.raises(TopologyError):
            pi1_fixed_det_moduli(r, 3, 5, 0)
        with pytest.raises(ValueError):
            h1_fixed_det_moduli(r, 3, 5, 1)

    def test_maximal_curve_accepted(self):
        assert h1_fixed_det_moduli(3, 3, 4, 0) == FGAbelianGroup.z2_power(4)


def test_group_table():
    rows = group_table([2], 1, 3)
    assert len(rows) == 3
    assert rows[0] == {"r": 2, "g": 3, "a": 0, "b": 0, "pi1": "Z/2", "h1": "trivial"}


def test_group_table_stops_at_maximal_curves():
    rows = group_table([3], 9, 2)
    assert max(row["a"] for row in rows) == 3
    assert len(rows) == 10
