"""Position analysis of the planar 4R closed chain on the Minkowskian plane.

Frame convention: the fixed pivot of the input crank sits at the origin O,
the other fixed pivot C lies on the positive x-axis at distance g.  The
input crank OA has length a and angle theta, the output crank CB has length
b and angle psi, the coupler AB has length h.  All angles are hyperbolic
(rapidities), so they are unbounded reals with no wraparound.

The closure condition ``|AB|^2 = h^2`` reduces to

    A(theta) cosh(psi) + B(theta) sinh(psi) = C(theta)

which the solver turns into a quadratic via the tanh-half substitution
y = tanh(psi / 2).  A root with |y| < 1 is an ordinary output angle; a root
with |y| > 1 closes the loop with the output pivot on the opposite branch
of its Minkowskian circle (see :func:`solve_output_angle`).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

Point = tuple[float, float]


class Root(Enum):
    """Which sign of the quadratic-formula square root produced a solution."""

    PLUS = "plus"
    MINUS = "minus"


class Branch(Enum):
    """Hyperbola branch of the output pivot B.

    STANDARD: B = (g + b cosh psi, b sinh psi).
    REVERSED: B = (g - b cosh psi, -b sinh psi).
    """

    STANDARD = "standard"
    REVERSED = "reversed"


class SolveMode(Enum):
    STRICT = "strict"
    EXTENDED = "extended"


class BranchingPointError(Exception):
    """The constraint equation degenerated: psi is undetermined at this theta."""

    def __init__(self, theta: float):
        super().__init__(f"branching point at theta={theta!r}: output angle undetermined")
        self.theta = theta


class LightlikeOutputError(Exception):
    """A tanh-half root landed on |y| = 1: the output direction is isotropic."""


class TimelikeCouplerError(Exception):
    """Coupler angle requested for a configuration whose AB direction is not spacelike."""


class DegenerateDenominatorError(Exception):
    """Coupler-angle denominator vanished."""


class DomainError(Exception):
    """An arcosh argument left [1, inf).  Carries the offending value as .q."""

    def __init__(self, q: float, what: str = "arcosh argument"):
        super().__init__(f"{what} = {q!r} is below 1")
        self.q = q


@dataclass(frozen=True)
class LinkageParams:
    """The four link lengths: a input crank, b output crank, g ground, h coupler."""

    a: float
    b: float
    g: float
    h: float

    def __post_init__(self) -> None:
        for name in ("a", "b", "g", "h"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v > 0):
                raise ValueError(f"link length {name} must be positive and finite, got {v}")


@dataclass(frozen=True)
class ConstraintCoeffs:
    A: float
    B: float
    C: float


@dataclass(frozen=True)
class OutputSolution:
    psi: float
    root: Root
    branch: Branch


@dataclass(frozen=True)
class SolverOptions:
    """Degeneracy tolerances for the output-angle solver.

    branching_tol is relative: the branching guard triggers when
    |A + C| <= branching_tol * max(1, |A| + |C|).  lightlike_tol is the
    band around |y| = 1 treated as an isotropic output direction.
    """

    branching_tol: float = 1e-10
    lightlike_tol: float = 1e-12


DEFAULT_OPTIONS = SolverOptions()


class BranchingKind(Enum):
    DISCRETE = "discrete"
    NONE = "none"
    ALL = "all"


@dataclass(frozen=True)
class BranchingResult:
    kind: BranchingKind
    ch_theta: float | None = None
    realizable: bool | None = None


@dataclass(frozen=True)
class LimitReport:
    """Closed-form cosh values of the four limiting angles.

    A limit exists as a real angle only when its cosh value is >= 1; the
    existence flags record that.  The feasible input range is the set of
    theta with cosh(theta) outside the open interval
    (ch_theta_min, ch_theta_max), and likewise for psi.
    """

    ch_theta_min: float
    ch_theta_max: float
    ch_psi_min: float
    ch_psi_max: float
    theta_min_exists: bool
    theta_max_exists: bool
    psi_min_exists: bool
    psi_max_exists: bool


@dataclass(frozen=True)
class Pose:
    """One assembly of the chain: the four joint coordinates."""

    o: Point
    a: Point
    b: Point
    c: Point


def constraint_coeffs(params: LinkageParams, theta: float) -> ConstraintCoeffs:
    """Coefficients of the closure equation A ch(psi) + B sh(psi) = C."""
    a, b, g, h = params.a, params.b, params.g, params.h
    ch, sh = math.cosh(theta), math.sinh(theta)
    return ConstraintCoeffs(
        A=2.0 * g * b - 2.0 * a * b * ch,
        B=2.0 * a * b * sh,
        C=h * h - g * g - b * b - a * a + 2.0 * a * g * ch,
    )


def solve_output_angle(
    params: LinkageParams,
    theta: float,
    mode: SolveMode = SolveMode.STRICT,
    options: SolverOptions = DEFAULT_OPTIONS,
) -> list[OutputSolution]:
    """All output angles closing the loop at the given input angle.

    The tanh-half substitution gives the quadratic

        (A + C) y^2 + 2 B y + (A - C) = 0,      y = tanh(psi / 2).

    In STRICT mode only roots with |y| < 1 are returned, each as a
    STANDARD-branch solution psi = 2 artanh(y).  In EXTENDED mode a root
    with |y| > 1 is converted to the REVERSED-branch solution
    psi = 2 artanh(1 / y): algebraically y = coth(t) makes the formal
    cosh/sinh pair equal (-cosh 2t, -sinh 2t), i.e. the output pivot sits
    on the past-pointing branch of its circle, with B as documented on
    :class:`Branch`.  Strict solutions are exactly the extended solutions
    whose branch is STANDARD.

    Returns an empty list when the discriminant B^2 + C^2 - A^2 is
    negative (the position is impossible).  Raises BranchingPointError when
    A + C vanishes to tolerance (psi undetermined) and LightlikeOutputError
    when a root lies on |y| = 1 to tolerance.

    Solutions are ordered PLUS root first, deterministically.
    """
    co = constraint_coeffs(params, theta)
    lead = co.A + co.C
    if abs(lead) <= options.branching_tol * max(1.0, abs(co.A) + abs(co.C)):
        raise BranchingPointError(theta)
    disc = co.B * co.B + co.C * co.C - co.A * co.A
    if disc < 0.0:
        return []
    sq = math.sqrt(disc)
    solutions: list[OutputSolution] = []
    for root, sign in ((Root.PLUS, 1.0), (Root.MINUS, -1.0)):
        y = (-co.B + sign * sq) / lead
        if abs(abs(y) - 1.0) <= options.lightlike_tol:
            raise LightlikeOutputError(
                f"tanh-half root |y|={abs(y)!r} is isotropic at theta={theta!r}"
            )
        if abs(y) < 1.0:
            solutions.append(OutputSolution(2.0 * math.atanh(y), root, Branch.STANDARD))
        elif mode is SolveMode.EXTENDED:
            solutions.append(OutputSolution(2.0 * math.atanh(1.0 / y), root, Branch.REVERSED))
    return solutions


def solve_output_angle_alt(params: LinkageParams, theta: float) -> list[float]:
    """Output angles via -artanh(B/A) +- arcosh(C / sqrt(A^2 - B^2)).

    This closed form only exists when A^2 > B^2 with A > 0 and the arcosh
    argument is at least 1; outside that domain it raises DomainError.  On
    its domain it agrees with the STANDARD-branch solutions of
    :func:`solve_output_angle`.
    """
    co = constraint_coeffs(params, theta)
    den_sq = co.A * co.A - co.B * co.B
    if den_sq <= 0.0 or co.A <= 0.0:
        raise DomainError(co.A / math.sqrt(abs(den_sq)) if den_sq != 0 else math.inf,
                          "A / sqrt(A^2 - B^2)")
    den = math.sqrt(den_sq)
    q = co.C / den
    if q < 1.0:
        raise DomainError(q, "C / sqrt(A^2 - B^2)")
    delta = math.atanh(co.B / co.A)
    spread = math.acosh(q)
    return [-delta + spread, -delta - spread]


def branching_points(params: LinkageParams, tol: float = 1e-12) -> BranchingResult:
    """Inputs where the closure equation degenerates and psi is undetermined.

    With g != b the degeneracy A + C = 0 happens at a single cosh(theta)
    value, realizable as a real angle only when that value is >= 1.  With
    g = b the quantity A + C is the constant h^2 - a^2: never zero when
    h != a (no branching), identically zero when h = a (every input angle
    is a branching point).
    """
    a, b, g, h = params.a, params.b, params.g, params.h
    scale = a + b + g + h
    if abs(g - b) <= tol * scale:
        if abs(h - a) <= tol * scale:
            return BranchingResult(BranchingKind.ALL)
        return BranchingResult(BranchingKind.NONE)
    ch_theta = (a * a - h * h) / (2.0 * a * (g - b)) + (g - b) / (2.0 * a)
    return BranchingResult(BranchingKind.DISCRETE, ch_theta, ch_theta >= 1.0)


def coupler_angle(params: LinkageParams, theta: float, psi: float, tol: float = 1e-12) -> float:
    """Coupler angle phi for a STANDARD-branch output angle psi.

    phi positions the coupler relative to the input crank; the coupler
    frame's axis direction is theta + phi - pi.  The pi offset is the plain
    real constant marking the direction reversal of the frame, not a
    hyperbolic period.

    Requires the coupler direction to be future-pointing spacelike:
    raises TimelikeCouplerError when |num / den| >= 1 and
    DegenerateDenominatorError when the denominator vanishes.
    """
    a, b, g = params.a, params.b, params.g
    num = b * math.sinh(psi) - a * math.sinh(theta)
    den = g + b * math.cosh(psi) - a * math.cosh(theta)
    if abs(den) <= tol * max(1.0, abs(num)):
        raise DegenerateDenominatorError(f"coupler denominator {den!r} at theta={theta!r}")
    t = num / den
    if abs(t) >= 1.0:
        raise TimelikeCouplerError(f"coupler direction ratio {t!r} is not spacelike")
    return math.atanh(t) - theta + math.pi


def transmission_arg(params: LinkageParams, theta: float) -> float:
    """The arcosh argument of the transmission angle; +-1 exactly at the input limits."""
    a, b, g, h = params.a, params.b, params.g, params.h
    return (-g * g - a * a + h * h + b * b + 2.0 * a * g * math.cosh(theta)) / (2.0 * b * h)


def transmission_angle(params: LinkageParams, theta: float) -> float:
    """Transmission angle between coupler and output crank at B.

    zeta = arcosh(q) with q from :func:`transmission_arg`.  Raises
    DomainError carrying q when q < 1; |q| = 1 there signals link
    alignment at a movement limit rather than infeasibility.
    """
    q = transmission_arg(params, theta)
    if q < 1.0:
        raise DomainError(q, "transmission arcosh argument")
    return math.acosh(q)


def diagonal_sq(params: LinkageParams, theta: float) -> float:
    """Signed squared length of the diagonal AC: g^2 + a^2 - 2ag cosh(theta).

    Equals h^2 + b^2 - 2bh cosh(zeta) whenever the transmission angle is
    defined; negative sign means the diagonal is timelike.
    """
    a, g = params.a, params.g
    return g * g + a * a - 2.0 * a * g * math.cosh(theta)


def input_limits(params: LinkageParams) -> tuple[float, float]:
    """cosh values of the limiting input angles (min, max).

    These are the roots of the solver's discriminant as a quadratic in
    cosh(theta); the crank moves where cosh(theta) lies outside the open
    interval between them.  Values below 1 mean the corresponding limit
    does not exist as a real angle.
    """
    a, b, g, h = params.a, params.b, params.g, params.h
    lo = (a * a + g * g - (b + h) ** 2) / (2.0 * a * g)
    hi = (a * a + g * g - (b - h) ** 2) / (2.0 * a * g)
    return (lo, hi)


def output_limits(params: LinkageParams) -> tuple[float, float]:
    """cosh values of the limiting output angles (min, max).

    Limiting positions happen when the input crank and the coupler align.
    """
    a, b, g, h = params.a, params.b, params.g, params.h
    lo = ((a - h) ** 2 - g * g - b * b) / (2.0 * b * g)
    hi = ((a + h) ** 2 - g * g - b * b) / (2.0 * b * g)
    return (lo, hi)


def limit_report(params: LinkageParams) -> LimitReport:
    ct_min, ct_max = input_limits(params)
    cp_min, cp_max = output_limits(params)
    return LimitReport(
        ch_theta_min=ct_min,
        ch_theta_max=ct_max,
        ch_psi_min=cp_min,
        ch_psi_max=cp_max,
        theta_min_exists=ct_min >= 1.0,
        theta_max_exists=ct_max >= 1.0,
        psi_min_exists=cp_min >= 1.0,
        psi_max_exists=cp_max >= 1.0,
    )


def pose(params: LinkageParams, theta: float, sol: OutputSolution) -> Pose:
    """Joint coordinates O, A, B, C for one solved output angle."""
    a, b, g = params.a, params.b, params.g
    ja = (a * math.cosh(theta), a * math.sinh(theta))
    if sol.branch is Branch.STANDARD:
        jb = (g + b * math.cosh(sol.psi), b * math.sinh(sol.psi))
    else:
        jb = (g - b * math.cosh(sol.psi), -b * math.sinh(sol.psi))
    return Pose(o=(0.0, 0.0), a=ja, b=jb, c=(g, 0.0))


def closure_residual(params: LinkageParams, theta: float, sol: OutputSolution) -> float:
    """Signed defect |AB|^2 - h^2 of a solution; ~0 for genuine solutions.

    Evaluated as (dx - dy)(dx + dy) - h^2 with each factor reduced to
    exponentials, which sidesteps the cancellation that squaring the large
    cosh/sinh coordinates would cause at big output angles.
    """
    a, b, g, h = params.a, params.b, params.g, params.h
    sign = 1.0 if sol.branch is Branch.STANDARD else -1.0
    lo = g + sign * b * math.exp(-sol.psi) - a * math.exp(-theta)
    hi = g + sign * b * math.exp(sol.psi) - a * math.exp(theta)
    return lo * hi - h * h


def coupler_frame_direction(
    params: LinkageParams, theta: float, sol: OutputSolution, tol: float = 1e-9
) -> tuple[float, float]:
    """Unit direction pair (cu, su) of the coupler frame's x-axis, AB / h.

    For a future-pointing coupler this is (cosh, sinh) of theta + phi - pi;
    the pair representation also covers past-pointing couplers, where no
    real angle exists.  Validates cu^2 - su^2 = 1 (loop closure) and raises
    TimelikeCouplerError for poses that do not close.
    """
    p = pose(params, theta, sol)
    cu = (p.b[0] - p.a[0]) / params.h
    su = (p.b[1] - p.a[1]) / params.h
    if abs(cu * cu - su * su - 1.0) > tol * max(1.0, cu * cu + su * su):
        raise TimelikeCouplerError(
            f"direction pair ({cu!r}, {su!r}) is not unit spacelike; pose does not close"
        )
    return (cu, su)
