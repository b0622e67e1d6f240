"""Planar 4R linkage analysis on the Minkowskian plane.

Library layout:

- :mod:`mink4r.double_plane`: split-complex (double-number) arithmetic.
- :mod:`mink4r.lorentz2`: Lorentzian 2-vectors, boosts, motions, angles.
- :mod:`mink4r.fourbar`: position analysis of the 4R chain.
- :mod:`mink4r.coupler_curve`: parametric traces and the implicit sextic.
- :mod:`mink4r.classify`: movement-type and subclass classification.
- :mod:`mink4r.cli`: the ``mink4r`` command-line tool.
"""

from .double_plane import (
    DoubleNumber,
    conj,
    from_polar,
    hyperbolic_modulus,
    hyperbolic_scalar_product,
    is_isotropic,
    minkowski_circle_point,
    mul,
)
from .lorentz2 import (
    Boost,
    CausalClass,
    CausalKind,
    LVec2,
    MixedCausalTypeError,
    Motion,
    NotFuturePointingError,
    Pointing,
    boost_apply,
    causal_classify,
    cosine_rule_side,
    motion_apply,
    motion_compose,
    oriented_angle,
    reversed_polygon_check,
)
from .fourbar import (
    Branch,
    BranchingKind,
    BranchingPointError,
    BranchingResult,
    ConstraintCoeffs,
    DegenerateDenominatorError,
    DomainError,
    LightlikeOutputError,
    LimitReport,
    LinkageParams,
    OutputSolution,
    Pose,
    Root,
    SolveMode,
    SolverOptions,
    TimelikeCouplerError,
    branching_points,
    closure_residual,
    constraint_coeffs,
    coupler_angle,
    coupler_frame_direction,
    diagonal_sq,
    input_limits,
    limit_report,
    output_limits,
    pose,
    solve_output_angle,
    solve_output_angle_alt,
    transmission_angle,
    transmission_arg,
)
from .coupler_curve import (
    CouplerPoint,
    DegenerateLegError,
    LegGeometry,
    SexticCurve,
    TracePolyline,
    gamma_of_point,
    leg_geometry,
    max_total_degree,
    normalized_residual,
    sextic_coefficients,
    sextic_eval,
    trace_curve,
    trace_point,
)
from .classify import (
    ClassificationReport,
    CrankType,
    Subclass,
    TParams,
    UnclassifiedSignPatternError,
    classify,
    grashof_analog,
    input_type,
    output_type,
    subclass,
    t_params,
)
from .config import JobConfig, ParseError, SweepRange, ValidationError, parse_config

__version__ = "0.1.0"
