"""Coupler-point trajectories and their implicit degree-6 curve.

A coupler point is fixed in the moving frame that sits at joint A with its
x-axis along the coupler AB.  Tracing it parametrically is a rigid-motion
transform of each solved pose.  Eliminating the frame direction instead
yields an implicit algebraic curve of total degree six in the fixed-frame
coordinates (X, Y): the two pivot-circle constraints are linear in the
cosh/sinh pair of the first leg direction, so solving the 2x2 system and
imposing cosh^2 - sinh^2 = 1 produces a polynomial identity.

The relative direction between the two legs of the coupler triangle is kept
as a (cosh, sinh)-like pair rather than an angle: for points between the
legs the pair is past-pointing (leading entry negative) and no real
hyperbolic angle exists, but every formula downstream consumes only the
pair.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .fourbar import (
    Branch,
    DEFAULT_OPTIONS,
    LinkageParams,
    OutputSolution,
    Root,
    SolveMode,
    SolverOptions,
    BranchingPointError,
    LightlikeOutputError,
    TimelikeCouplerError,
    coupler_frame_direction,
    pose,
    solve_output_angle,
)


class DegenerateLegError(Exception):
    """A coupler-triangle leg is lightlike or timelike where it may not be."""


@dataclass(frozen=True)
class CouplerPoint:
    """Moving-frame coordinates of the traced point."""

    x: float
    y: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"coupler point must be finite, got ({self.x}, {self.y})")


@dataclass(frozen=True)
class LegGeometry:
    """Leg lengths r = |AX|, s = |BX| and the relative direction pair of the legs."""

    r: float
    s: float
    chg: float
    shg: float


def gamma_of_point(h: float, x: float, y: float, tol: float = 1e-12) -> tuple[float, float]:
    """Relative direction pair (chg, shg) from leg AX to leg BX.

    chg = (x(x-h) - y^2) / (r s) and shg = h y / (r s) with r, s the two
    leg moduli.  When both legs are spacelike chg^2 - shg^2 = +1 (chg may
    still be negative: the pair is then past-pointing and corresponds to no
    real angle); with one timelike leg the pair normalizes to -1 instead.

    Raises DegenerateLegError when either leg modulus vanishes to
    tolerance.
    """
    r_sq = x * x - y * y
    s_sq = (x - h) ** 2 - y * y
    r = math.sqrt(abs(r_sq))
    s = math.sqrt(abs(s_sq))
    scale = max(1.0, abs(x) + abs(y) + h)
    if r <= tol * scale or s <= tol * scale:
        raise DegenerateLegError(f"isotropic coupler-triangle leg for point ({x}, {y})")
    return ((x * (x - h) - y * y) / (r * s), h * y / (r * s))


def leg_geometry(h: float, pt: CouplerPoint, tol: float = 1e-12) -> LegGeometry:
    chg, shg = gamma_of_point(h, pt.x, pt.y, tol)
    r = math.sqrt(abs(pt.x * pt.x - pt.y * pt.y))
    s = math.sqrt(abs((pt.x - h) ** 2 - pt.y * pt.y))
    return LegGeometry(r, s, chg, shg)


def trace_point(
    params: LinkageParams, theta: float, sol: OutputSolution, pt: CouplerPoint
) -> tuple[float, float]:
    """Fixed-frame image of a coupler point under one solved pose.

    Applies the motion with the coupler frame's direction pair and
    translation A, so pt = (0, 0) lands on A and pt = (h, 0) lands on B.
    Propagates TimelikeCouplerError for poses that do not close.
    """
    p = pose(params, theta, sol)
    cu, su = coupler_frame_direction(params, theta, sol)
    return (p.a[0] + pt.x * cu + pt.y * su, p.a[1] + pt.x * su + pt.y * cu)


@dataclass
class TracePolyline:
    """One connected arc of a traced curve, tagged by its solution labels."""

    root: Root
    branch: Branch
    points: list[tuple[float, float, float]] = field(default_factory=list)  # (theta, X, Y)


def trace_curve(
    params: LinkageParams,
    pt: CouplerPoint,
    theta_lo: float,
    theta_hi: float,
    n: int,
    mode: SolveMode = SolveMode.STRICT,
    options: SolverOptions = DEFAULT_OPTIONS,
) -> list[TracePolyline]:
    """Sample the coupler curve on a uniform input-angle grid.

    One polyline per (root, branch) combination, split wherever a sample is
    infeasible for that combination; samples at branching points or with an
    isotropic output direction are treated as infeasible.  Output order is
    deterministic: by root, branch, then first sample index.
    """
    if n < 2:
        raise ValueError("need at least two samples")
    if not theta_lo < theta_hi:
        raise ValueError("theta_lo must be below theta_hi")

    open_arcs: dict[tuple[Root, Branch], TracePolyline] = {}
    finished: list[tuple[tuple[int, int, int], TracePolyline]] = []
    order = {Root.PLUS: 0, Root.MINUS: 1, Branch.STANDARD: 0, Branch.REVERSED: 1}

    def close(key: tuple[Root, Branch], start: int) -> None:
        arc = open_arcs.pop(key, None)
        if arc is not None and arc.points:
            finished.append(((order[key[0]], order[key[1]], start), arc))

    starts: dict[tuple[Root, Branch], int] = {}
    for i in range(n):
        theta = theta_lo + i * (theta_hi - theta_lo) / (n - 1)
        try:
            sols = solve_output_angle(params, theta, mode, options)
        except (BranchingPointError, LightlikeOutputError):
            sols = []
        seen = set()
        for sol in sols:
            key = (sol.root, sol.branch)
            try:
                xy = trace_point(params, theta, sol, pt)
            except TimelikeCouplerError:
                continue
            seen.add(key)
            if key not in open_arcs:
                open_arcs[key] = TracePolyline(sol.root, sol.branch)
                starts[key] = i
            open_arcs[key].points.append((theta, xy[0], xy[1]))
        for key in list(open_arcs):
            if key not in seen:
                close(key, starts[key])
    for key in list(open_arcs):
        close(key, starts[key])
    finished.sort(key=lambda item: item[0])
    return [arc for _, arc in finished]


@dataclass(frozen=True)
class SexticCurve:
    """Dense coefficient table of the implicit coupler curve.

    coeffs[i, j] multiplies X^i Y^j; entries with i + j > 6 are exactly
    zero.  Coefficients are normalized so the largest magnitude is 1;
    ``scale`` is the divisor that was taken out.
    """

    coeffs: np.ndarray
    scale: float


def _poly_mul(p: np.ndarray, q: np.ndarray) -> np.ndarray:
    out = np.zeros((p.shape[0] + q.shape[0] - 1, p.shape[1] + q.shape[1] - 1))
    for i in range(p.shape[0]):
        for j in range(p.shape[1]):
            if p[i, j] != 0.0:
                out[i : i + q.shape[0], j : j + q.shape[1]] += p[i, j] * q
    return out


def _linear(cx: float, cy: float, c0: float) -> np.ndarray:
    p = np.zeros((2, 2))
    p[1, 0] = cx
    p[0, 1] = cy
    p[0, 0] = c0
    return p


def sextic_coefficients(params: LinkageParams, pt: CouplerPoint) -> SexticCurve:
    """Implicitize the coupler curve by exact polynomial expansion.

    Both coupler-triangle legs must be strictly spacelike
    (x^2 - y^2 > 0 and (x - h)^2 - y^2 > 0), otherwise DegenerateLegError.

    The two pivot constraints, written against the cosh/sinh pair (u, v)
    of the first leg's direction, are

        P u + Q v = R      with  P = 2s(X - g) chg - 2sY shg,
                                 Q = 2s(X - g) shg - 2sY chg,
                                 R = (X - g)^2 - Y^2 + s^2 - b^2,
        M u + N v = S      with  M = 2rX,  N = -2rY,
                                 S = X^2 - Y^2 + r^2 - a^2.

    Solving linearly for (u, v) and imposing u^2 - v^2 = 1 gives

        (R N - Q S)^2 - (P S - M R)^2 - (P N - Q M)^2 = 0,

    whose expansion has total degree six with leading form
    -4 h^2 (X^2 - Y^2)^3.
    """
    a, b, g, h = params.a, params.b, params.g, params.h
    r_sq = pt.x * pt.x - pt.y * pt.y
    s_sq = (pt.x - h) ** 2 - pt.y * pt.y
    if r_sq <= 0.0 or s_sq <= 0.0:
        raise DegenerateLegError(
            f"implicitization needs spacelike legs; got r^2={r_sq!r}, s^2={s_sq!r}"
        )
    geo = leg_geometry(h, pt)
    r, s, chg, shg = geo.r, geo.s, geo.chg, geo.shg

    p_lin = _linear(2.0 * s * chg, -2.0 * s * shg, -2.0 * g * s * chg)
    q_lin = _linear(2.0 * s * shg, -2.0 * s * chg, -2.0 * g * s * shg)
    r_quad = np.zeros((3, 3))
    r_quad[2, 0] = 1.0
    r_quad[0, 2] = -1.0
    r_quad[1, 0] = -2.0 * g
    r_quad[0, 0] = g * g + s * s - b * b
    m_lin = _linear(2.0 * r, 0.0, 0.0)
    n_lin = _linear(0.0, -2.0 * r, 0.0)
    s_quad = np.zeros((3, 3))
    s_quad[2, 0] = 1.0
    s_quad[0, 2] = -1.0
    s_quad[0, 0] = r * r - a * a

    first = _poly_mul(r_quad, n_lin) - _poly_mul(q_lin, s_quad)
    second = _poly_mul(p_lin, s_quad) - _poly_mul(m_lin, r_quad)
    third = _poly_mul(p_lin, n_lin) - _poly_mul(q_lin, m_lin)

    table = np.zeros((7, 7))
    for part, sign in ((first, 1.0), (second, -1.0), (third, -1.0)):
        sq = _poly_mul(part, part)
        table[: sq.shape[0], : sq.shape[1]] += sign * sq
    scale = float(np.abs(table).max())
    return SexticCurve(coeffs=table / scale, scale=scale)


def sextic_eval(curve: SexticCurve, x: float, y: float) -> float:
    """Evaluate the coefficient table by nested (Horner) summation."""
    total = 0.0
    for i in range(curve.coeffs.shape[0] - 1, -1, -1):
        row = 0.0
        for j in range(curve.coeffs.shape[1] - 1, -1, -1):
            row = row * y + curve.coeffs[i, j]
        total = total * x + row
    return total


def normalized_residual(curve: SexticCurve, x: float, y: float) -> float:
    """|value| divided by the degree-6 growth envelope max(1, |x|, |y|)^6."""
    return abs(sextic_eval(curve, x, y)) / max(1.0, abs(x), abs(y)) ** 6


def max_total_degree(curve: SexticCurve, rel_tol: float = 1e-9) -> int:
    """Largest i + j whose normalized coefficient exceeds rel_tol."""
    degree = 0
    for i in range(curve.coeffs.shape[0]):
        for j in range(curve.coeffs.shape[1]):
            if abs(curve.coeffs[i, j]) > rel_tol:
                degree = max(degree, i + j)
    return degree
