# Copyright © 2025 Sierra Labs LLC
# SPDX-License-Identifier: AGPL-3.0-only
# License-Filename: LICENSE

"""
Topological types of real curves and of Real vector bundles over them.

A real curve is classified by its Weichold invariants (g, a, eps). A Real
bundle of rank r and degree d is classified by the Stiefel-Whitney class of
its real part on each of the a real circles.
"""

import logging
from dataclasses import dataclass
from math import gcd
from typing import Any, Dict, List, Sequence, Tuple

logger = logging.getLogger(__name__)


class TopologyError(ValueError):
    """A curve or bundle violates a classification constraint."""
    pass


class QuaternionicComponentError(TopologyError):
    """Quaternionic components of the real locus are not modeled."""
    pass


@dataclass(frozen=True)
class RealCurveType:
    """Weichold invariants of a real curve."""
    g: int
    a: int
    eps: int

    @property
    def connected_complement(self) -> bool:
        """True when the complement of the real locus is connected."""
        return self.eps == 1

    def to_dict(self) -> Dict[str, int]:
        return {"g": self.g, "a": self.a, "eps": self.eps}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "RealCurveType":
        return validate_curve(int(data["g"]), int(data["a"]), int(data["eps"]))

    def __str__(self) -> str:
        return f"({self.g},{self.a},{self.eps})"


@dataclass(frozen=True)
class RealBundleTopType:
    """
    Topological type of a Real bundle over a real curve.

    circle_classes holds the restriction of w to each real circle in order;
    only the counts b (odd circles) and c (even circles) enter any formula.
    """
    curve: RealCurveType
    r: int
    d: int
    circle_classes: Tuple[int, ...]

    @property
    def b(self) -> int:
        return sum(self.circle_classes)

    @property
    def c(self) -> int:
        return len(self.circle_classes) - self.b

    @property
    def gcd(self) -> int:
        return gcd(self.r, self.d)

    @property
    def coprime(self) -> bool:
        """gcd(r, d) = 1, the smoothness hypothesis for the fixed determinant moduli space."""
        return self.gcd == 1

    def to_dict(self) -> Dict[str, Any]:
        return {"r": self.r, "d": self.d, "classes": list(self.circle_classes)}

    def summary(self) -> Dict[str, Any]:
        data = self.to_dict()
        data.update({"b": self.b, "c": self.c, "gcd": self.gcd, "coprime": self.coprime})
        return data


def _require_int(name: str, value: Any) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise TopologyError(f"{name} must be an integer, got {value!r}")
    return value


def validate_curve(g: int, a: int, eps: int) -> RealCurveType:
    """Check that (g, a, eps) is realized by a real curve."""
    g = _require_int("g", g)
    a = _require_int("a", a)
    eps = _require_int("eps", eps)
    if g < 0:
        raise TopologyError(f"genus must be non-negative, got g={g}")
    if eps not in (0, 1):
        raise TopologyError(f"eps must be 0 or 1, got eps={eps}")
    if a < 1 - eps:
        raise TopologyError(f"1 - eps <= a fails: a={a}, eps={eps}")
    if a > g + 1 - eps:
        raise TopologyError(f"a <= g + 1 - eps fails: a={a}, g={g}, eps={eps}")
    if eps == 0 and (g + 1 - a) % 2 != 0:
        raise TopologyError(f"g + 1 = a (mod 2) fails for a disconnected complement: g={g}, a={a}")
    return RealCurveType(g, a, eps)


def enumerate_curves(g: int) -> List[RealCurveType]:
    """All real curve types of genus g: connected complement first, then by number of circles."""
    g = _require_int("g", g)
    if g < 0:
        raise TopologyError(f"genus must be non-negative, got g={g}")
    curves: List[RealCurveType] = []
    for eps in (1, 0):
        for a in range(1 - eps, g + 2 - eps):
            if eps == 0 and (g + 1 - a) % 2 != 0:
                continue
            curves.append(RealCurveType(g, a, eps))
    return curves


def validate_bundle(
    curve: RealCurveType,
    r: int,
    d: int,
    circle_classes: Sequence[int],
    component: str = "real",
) -> RealBundleTopType:
    """
    Check a Real bundle topological type.

    The degree must have the parity of the number of odd circles.
    """
    if component == "quaternionic":
        raise QuaternionicComponentError("Quaternionic components are not supported")
    if component != "real":
        raise TopologyError(f"Unknown component kind '{component}'")
    r = _require_int("r", r)
    d = _require_int("d", d)
    if r < 1:
        raise TopologyError(f"rank must be at least 1, got r={r}")
    classes = tuple(circle_classes)
    if len(classes) != curve.a:
        raise TopologyError(f"expected {curve.a} circle classes, got {len(classes)}")
    for w in classes:
        if w not in (0, 1):
            raise TopologyError(f"circle classes must be 0 or 1, got {w!r}")
    b = sum(classes)
    if (d - b) % 2 != 0:
        raise TopologyError(f"d = w (mod 2) fails: d={d} but {b} odd circles")
    bundle = RealBundleTopType(curve, r, d, classes)
    logger.debug(f"Validated bundle r={r} d={d} on {curve}: b={bundle.b} c={bundle.c} coprime={bundle.coprime}")
    return bundle


def bundle_from_counts(curve: RealCurveType, r: int, d: int, b: int) -> RealBundleTopType:
    """Bundle whose first b circles are odd and the remaining a - b are even."""
    b = _require_int("b", b)
    if not 0 <= b <= curve.a:
        raise TopologyError(f"0 <= b <= a fails: b={b}, a={curve.a}")
    return validate_bundle(curve, r, d, [1] * b + [0] * (curve.a - b))


def smallest_coprime_degree(r: int, b: int) -> int:
    """Smallest positive d with d = b (mod 2) and gcd(r, d) = 1."""
    if r % 2 == 0 and b % 2 == 0:
        raise TopologyError(f"no degree of parity {b % 2} is coprime to the even rank {r}")
    d = 1 if b % 2 else 2
    while gcd(r, d) != 1:
        d += 2
    return d


def stable_range(r: int, g: int) -> int:
    """Degrees k <= g(r-1) - 2 where the moduli space and BCG agree in cohomology."""
    if r < 2 or g < 2:
        raise TopologyError(f"stable range needs r >= 2 and g >= 2, got r={r}, g={g}")
    return g * (r - 1) - 2


def quotient_surface(curve: RealCurveType) -> Tuple[int, int]:
    """
    Genus and number of boundary circles (g_hat, n) of the quotient surface.

    The real circles become a boundary circles; a connected complement adds one
    or two more boundary circles so that 2 g_hat + n - 1 = g.
    """
    if curve.eps == 0:
        n = curve.a
    else:
        n = curve.a + 1 if (curve.g - curve.a) % 2 == 0 else curve.a + 2
    ghat, odd = divmod(curve.g + 1 - n, 2)
    if odd or ghat < 0:
        raise TopologyError(f"no quotient surface for {curve}")
    return ghat, n


def moduli_dimension(r: int, g: int) -> int:
    """Real dimension (r^2 - 1)(g - 1) of the fixed determinant moduli space."""
    return (r * r - 1) * (g - 1)
