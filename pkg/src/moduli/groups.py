# Copyright © 2025 Sierra Labs LLC
# SPDX-License-Identifier: AGPL-3.0-only
# License-Filename: LICENSE

"""
Component groups of real gauge groups and fundamental groups of fixed
determinant real moduli spaces.

Every group here has the shape Z/2 acting on (Z/2)^k x Z^m, with the action
trivial on the Z/2 factors and either trivial or -1 on the Z factors.
"""

import logging
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Tuple

from .topology import validate_curve

logger = logging.getLogger(__name__)


class UnsupportedCaseError(ValueError):
    """No closed answer is available for the requested parameters."""
    pass


class GroupKind(str, Enum):
    DIRECT = "direct"
    SEMIDIRECT = "semidirect"


def _power(name: str, exponent: int) -> str:
    if exponent == 1:
        return name
    return f"({name})^{exponent}" if "/" in name else f"{name}^{exponent}"


@dataclass(frozen=True)
class FGAbelianGroup:
    """Finitely generated abelian group Z^free_rank x prod Z/n_i."""
    free_rank: int = 0
    torsion: Tuple[int, ...] = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError(f"free rank must be non-negative, got {self.free_rank}")
        for order in self.torsion:
            if order < 2:
                raise ValueError(f"torsion orders must be at least 2, got {order}")
        object.__setattr__(self, "torsion", tuple(sorted(self.torsion)))

    @classmethod
    def z2_power(cls, count: int, free_rank: int = 0) -> "FGAbelianGroup":
        return cls(free_rank, (2,) * count)

    @property
    def torsion_count(self) -> int:
        return len(self.torsion)

    @property
    def mod2_rank(self) -> int:
        """dim H^1(-; F_2) of a space with this H_1."""
        return self.free_rank + sum(1 for order in self.torsion if order % 2 == 0)

    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def remove_z2(self) -> "FGAbelianGroup":
        """Quotient by one Z/2 summand."""
        if 2 not in self.torsion:
            raise ValueError(f"{self} has no Z/2 summand")
        torsion = list(self.torsion)
        torsion.remove(2)
        return FGAbelianGroup(self.free_rank, tuple(torsion))

    def to_dict(self) -> Dict[str, Any]:
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}

    def __str__(self) -> str:
        if self.is_trivial():
            return "trivial"
        parts = [_power(f"Z/{order}", count) for order, count in sorted(Counter(self.torsion).items())]
        if self.free_rank:
            parts.append(_power("Z", self.free_rank))
        return " × ".join(parts)


@dataclass(frozen=True)
class GroupDescriptor:
    """
    Z/2 acting on the base (Z/2)^torsion_rank x Z^free_rank.

    action lists one sign per base factor, Z/2 factors first.
    """
    torsion_rank: int
    free_rank: int
    action: Tuple[int, ...] = field(default=())

    def __post_init__(self):
        action = tuple(self.action) or (1,) * (self.torsion_rank + self.free_rank)
        if len(action) != self.torsion_rank + self.free_rank:
            raise ValueError(f"action needs {self.torsion_rank + self.free_rank} signs, got {len(action)}")
        if any(sign not in (1, -1) for sign in action):
            raise ValueError(f"action signs must be +1 or -1, got {action}")
        if any(sign != 1 for sign in action[: self.torsion_rank]):
            raise ValueError("Z/2 factors only admit the trivial action")
        object.__setattr__(self, "action", action)

    @property
    def kind(self) -> GroupKind:
        return GroupKind.DIRECT if all(sign == 1 for sign in self.action) else GroupKind.SEMIDIRECT

    @property
    def base(self) -> FGAbelianGroup:
        return FGAbelianGroup.z2_power(self.torsion_rank, self.free_rank)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": self.kind.value,
            "base": {"z2": self.torsion_rank, "z": self.free_rank},
            "action": list(self.action),
        }

    def __str__(self) -> str:
        base = self.base
        if base.is_trivial():
            return "Z/2"
        inner = str(base)
        if " × " in inner:
            inner = f"({inner})"
        symbol = "×" if self.kind == GroupKind.DIRECT else "⋉"
        return f"Z/2 {symbol} {inner}"


def _check(r: int, a: int, b: int) -> None:
    if r < 2:
        raise ValueError(f"rank must be at least 2, got r={r}")
    if not 0 <= b <= a:
        raise ValueError(f"0 <= b <= a fails: b={b}, a={a}")


def pi0_sgauge(r: int, a: int, b: int) -> FGAbelianGroup:
    """Components of the determinant one real gauge group."""
    _check(r, a, b)
    if r >= 3:
        return FGAbelianGroup.z2_power(a)
    return FGAbelianGroup.z2_power(b, a - b)


def pi0_cgauge(r: int, a: int, b: int) -> GroupDescriptor:
    """Z/2 acting on pi0_sgauge, by -1 on the Z factors from even circles in rank 2."""
    base = pi0_sgauge(r, a, b)
    return GroupDescriptor(base.torsion_count, base.free_rank, (1,) * base.torsion_count + (-1,) * base.free_rank)


def pi1_fixed_det_moduli(r: int, g: int, a: int, b: int) -> GroupDescriptor:
    """
    Fundamental group of the fixed determinant real moduli space.

    The rank two case is a semidirect product whenever some circle is even.
    """
    if g < 2:
        raise ValueError(f"genus must be at least 2, got g={g}")
    validate_curve(g, a, 1 if a <= g else 0)
    if r == 2 and g == 2:
        raise UnsupportedCaseError("pi1 is not available for r = 2, g = 2")
    descriptor = pi0_cgauge(r, a, b)
    logger.debug(f"pi1 for r={r} g={g} a={a} b={b}: {descriptor}")
    return descriptor


def abelianize(gd: GroupDescriptor) -> FGAbelianGroup:
    """
    Abelianization of Z/2 acting on the base.

    Z factors inverted by the action become Z/2; everything else survives,
    including the acting Z/2.
    """
    inverted = sum(1 for sign in gd.action[gd.torsion_rank:] if sign == -1)
    free = gd.free_rank - inverted
    return FGAbelianGroup.z2_power(gd.torsion_rank + inverted + 1, free)


def h1_fixed_det_moduli(r: int, g: int, a: int, b: int) -> FGAbelianGroup:
    """H_1 of the fixed determinant real moduli space, (Z/2)^a."""
    return abelianize(pi1_fixed_det_moduli(r, g, a, b)).remove_z2()


def group_table(ranks: List[int], max_circles: int, g: int = 3) -> List[Dict[str, Any]]:
    """pi1 and H_1 for every (r, a, b) with a <= min(max_circles, g + 1)."""
    rows: List[Dict[str, Any]] = []
    for r in ranks:
        for a in range(min(max_circles, g + 1) + 1):
            for b in range(a + 1):
                pi1 = pi1_fixed_det_moduli(r, g, a, b)
                rows.append(
                    {
                        "r": r,
                        "g": g,
                        "a": a,
                        "b": b,
                        "pi1": str(pi1),
                        "h1": str(h1_fixed_det_moduli(r, g, a, b)),
                    }
                )
    return rows
