"""Arithmetic of the double-number (split-complex) plane.

A double number is ``x + j*y`` with ``j*j = +1``.  These numbers coordinatize
the Minkowskian plane the same way complex numbers coordinatize the Euclidean
plane: the squared modulus is the indefinite form ``x**2 - y**2``, circles are
hyperbolas, and rotations are hyperbolic boosts.

The algebra has zero divisors (everything on the lines ``y = x`` and
``y = -x``), so no division is provided.  Downstream code is written
division-free or checks its denominators explicitly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class DoubleNumber:
    """Split-complex value: ``x`` real part, ``y`` unipotent part."""

    x: float
    y: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"double number parts must be finite, got ({self.x}, {self.y})")

    def __add__(self, other: "DoubleNumber") -> "DoubleNumber":
        return DoubleNumber(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "DoubleNumber") -> "DoubleNumber":
        return DoubleNumber(self.x - other.x, self.y - other.y)

    def __mul__(self, other: "DoubleNumber") -> "DoubleNumber":
        return mul(self, other)

    def __neg__(self) -> "DoubleNumber":
        return DoubleNumber(-self.x, -self.y)


def mul(z: DoubleNumber, w: DoubleNumber) -> DoubleNumber:
    """Product in the split-complex algebra: (x+jy)(u+jv) = xu+yv + j(xv+yu)."""
    return DoubleNumber(z.x * w.x + z.y * w.y, z.x * w.y + z.y * w.x)


def conj(z: DoubleNumber) -> DoubleNumber:
    """Hyperbolic conjugate: negate the unipotent part."""
    return DoubleNumber(z.x, -z.y)


def hyperbolic_scalar_product(z: DoubleNumber, w: DoubleNumber) -> float:
    """Real part of z * conj(w), i.e. the indefinite inner product xu - yv."""
    return z.x * w.x - z.y * w.y


def hyperbolic_modulus(z: DoubleNumber) -> float:
    """sqrt(|x**2 - y**2|), the distance of z from the origin.

    Multiplicative: the modulus of a product is the product of moduli.
    Vanishes on the isotropic lines y = +-x even for nonzero z.
    """
    return math.sqrt(abs(z.x * z.x - z.y * z.y))


def is_isotropic(z: DoubleNumber, tol: float = 1e-12) -> bool:
    """True when z lies on an isotropic line, to relative tolerance.

    The test |x**2 - y**2| <= tol * max(1, x**2 + y**2) scales with the
    point so huge and tiny vectors classify consistently.
    """
    if tol < 0:
        raise ValueError("tol must be nonnegative")
    q = z.x * z.x - z.y * z.y
    return abs(q) <= tol * max(1.0, z.x * z.x + z.y * z.y)


def from_polar(r: float, phi: float) -> DoubleNumber:
    """Hyperbolic Euler form r * e^{j phi} = r*(cosh phi + j sinh phi).

    Defined on the right branch only: the result has x**2 - y**2 = r**2 > 0
    and positive real part.  phi may be any real (the modulus does not
    constrain its sign).
    """
    if not (r > 0 and math.isfinite(r)):
        raise ValueError(f"radius must be positive and finite, got {r}")
    return DoubleNumber(r * math.cosh(phi), r * math.sinh(phi))


def minkowski_circle_point(r: float, t: float) -> tuple[float, float]:
    """Point (r cosh t, r sinh t) on the Minkowskian circle x**2 - y**2 = r**2."""
    if not (r > 0 and math.isfinite(r)):
        raise ValueError(f"radius must be positive and finite, got {r}")
    return (r * math.cosh(t), r * math.sinh(t))
