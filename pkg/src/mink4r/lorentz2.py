"""Two-dimensional Lorentzian vector machinery.

Vectors live in R^2 with the quadratic form u1**2 - u2**2.  This module
provides causal classification (spacelike / lightlike / timelike, future or
past pointing), boosts and plane motions, oriented hyperbolic angles, the
triangle side-length rule, and the reversed polygon inequality used as a
test oracle throughout the package.

Angles here are rapidities: plain unbounded reals, never reduced modulo
anything.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, NamedTuple

Point = tuple[float, float]


class CausalKind(Enum):
    SPACELIKE = "spacelike"
    LIGHTLIKE = "lightlike"
    TIMELIKE = "timelike"


class Pointing(Enum):
    FUTURE = "future"
    PAST = "past"
    UNDEFINED = "undefined"


class MixedCausalTypeError(ValueError):
    """Angle requested between vectors of different causal kinds."""


class NotFuturePointingError(ValueError):
    """Angle or polygon oracle requested for a non-future-pointing vector."""


@dataclass(frozen=True)
class LVec2:
    u1: float
    u2: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.u1) and math.isfinite(self.u2)):
            raise ValueError(f"coordinates must be finite, got ({self.u1}, {self.u2})")

    def __add__(self, other: "LVec2") -> "LVec2":
        return LVec2(self.u1 + other.u1, self.u2 + other.u2)

    def __sub__(self, other: "LVec2") -> "LVec2":
        return LVec2(self.u1 - other.u1, self.u2 - other.u2)


@dataclass(frozen=True)
class CausalClass:
    kind: CausalKind
    pointing: Pointing


@dataclass(frozen=True)
class Boost:
    """Hyperbolic rotation by rapidity phi: matrix [[ch, sh], [sh, ch]]."""

    phi: float

    def matrix(self) -> tuple[tuple[float, float], tuple[float, float]]:
        c, s = math.cosh(self.phi), math.sinh(self.phi)
        return ((c, s), (s, c))


@dataclass(frozen=True)
class Motion:
    """Affine isometry of the Minkowskian plane: boost then translation."""

    phi: float
    tx: float
    ty: float


IDENTITY_MOTION = Motion(0.0, 0.0, 0.0)


def lorentz_product(u: LVec2, v: LVec2) -> float:
    return u.u1 * v.u1 - u.u2 * v.u2


def hyperbolic_norm(u: LVec2) -> float:
    """sqrt of the absolute value of the self inner product."""
    return math.sqrt(abs(u.u1 * u.u1 - u.u2 * u.u2))


def causal_classify(v: LVec2, tol: float = 1e-12) -> CausalClass:
    """Classify v by the sign of u1**2 - u2**2, relative to tol.

    The zero band is |u1**2 - u2**2| <= tol * (u1**2 + u2**2), so the
    classification is scale invariant.  The zero vector and everything in
    the band is lightlike with undefined pointing; spacelike vectors point
    to the future when u1 > 0, timelike ones when u2 > 0.
    """
    if tol < 0:
        raise ValueError("tol must be nonnegative")
    q = v.u1 * v.u1 - v.u2 * v.u2
    scale = v.u1 * v.u1 + v.u2 * v.u2
    if scale == 0.0 or abs(q) <= tol * scale:
        return CausalClass(CausalKind.LIGHTLIKE, Pointing.UNDEFINED)
    if q > 0:
        return CausalClass(CausalKind.SPACELIKE, Pointing.FUTURE if v.u1 > 0 else Pointing.PAST)
    return CausalClass(CausalKind.TIMELIKE, Pointing.FUTURE if v.u2 > 0 else Pointing.PAST)


def boost_apply(b: Boost, v: LVec2) -> LVec2:
    c, s = math.cosh(b.phi), math.sinh(b.phi)
    return LVec2(v.u1 * c + v.u2 * s, v.u1 * s + v.u2 * c)


def motion_apply(m: Motion, p: Point) -> Point:
    c, s = math.cosh(m.phi), math.sinh(m.phi)
    return (p[0] * c + p[1] * s + m.tx, p[0] * s + p[1] * c + m.ty)


def motion_compose(outer: Motion, inner: Motion) -> Motion:
    """Motion equal to applying ``inner`` first, then ``outer``."""
    tx, ty = motion_apply(outer, (inner.tx, inner.ty))
    return Motion(outer.phi + inner.phi, tx, ty)


def _rapidity(v: LVec2, kind: CausalKind) -> float:
    # Future spacelike (c, s) has c > |s|; future timelike (s, c) has c > |s|.
    if kind is CausalKind.SPACELIKE:
        return math.atanh(v.u2 / v.u1)
    return math.atanh(v.u1 / v.u2)


def oriented_angle(x: LVec2, y: LVec2, tol: float = 1e-12) -> float:
    """Signed rapidity phi with boost(phi) sending x's direction to y's.

    Defined only for two future-pointing vectors of the same causal kind
    (both spacelike or both timelike).  Computed via artanh of coordinate
    ratios rather than arcosh of the inner product, because the inner
    product form cannot recover the sign of phi.

    Raises MixedCausalTypeError when the kinds differ and
    NotFuturePointingError when either vector fails to point to the future
    (lightlike vectors always fail: their pointing is undefined).
    """
    cx = causal_classify(x, tol)
    cy = causal_classify(y, tol)
    if cx.kind is not cy.kind:
        raise MixedCausalTypeError(f"no angle between {cx.kind.value} and {cy.kind.value} vectors")
    if cx.pointing is not Pointing.FUTURE or cy.pointing is not Pointing.FUTURE:
        raise NotFuturePointingError("oriented angle needs two future-pointing vectors")
    return _rapidity(y, cy.kind) - _rapidity(x, cx.kind)


class CosineRuleSide(NamedTuple):
    """Third side from two sides and the included hyperbolic angle.

    ``signed_sq`` is a**2 + b**2 - 2ab cosh(angle) before the absolute
    value is taken; its sign carries the causal type of the computed side.
    """

    length: float
    signed_sq: float


def cosine_rule_side(a: float, b: float, angle_c: float) -> CosineRuleSide:
    if a <= 0 or b <= 0:
        raise ValueError("side lengths must be positive")
    q = a * a + b * b - 2.0 * a * b * math.cosh(angle_c)
    return CosineRuleSide(math.sqrt(abs(q)), q)


def reversed_polygon_check(vs: Iterable[LVec2], slack: float = 1e-9, tol: float = 1e-12) -> bool:
    """Oracle for the reversed triangle inequality and its polygon closure.

    For future-pointing vectors of one causal kind the norm of the sum
    dominates the sum of norms.  Returns that comparison with a relative
    slack band; inputs violating the preconditions raise instead of
    returning False.
    """
    vecs = list(vs)
    if not vecs:
        raise ValueError("need at least one vector")
    kinds = set()
    for v in vecs:
        c = causal_classify(v, tol)
        if c.pointing is not Pointing.FUTURE:
            raise NotFuturePointingError("polygon oracle needs future-pointing vectors")
        kinds.add(c.kind)
    if len(kinds) != 1:
        raise MixedCausalTypeError("polygon oracle needs vectors of a single causal kind")
    total = LVec2(sum(v.u1 for v in vecs), sum(v.u2 for v in vecs))
    norm_sum = sum(hyperbolic_norm(v) for v in vecs)
    return hyperbolic_norm(total) >= norm_sum - slack * max(1.0, norm_sum)
