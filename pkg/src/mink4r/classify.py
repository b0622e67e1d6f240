"""Type classification of a Minkowskian planar 4R linkage.

Five linear forms in the link lengths decide everything: whether each crank
is a crank (moves through angle zero), a rocker (two separate ranges) or a
superrocker (three separate ranges), plus the strange / rigid / reducible /
irreducible subclass taxonomy and a reversed Grashof-style test.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .fourbar import BranchingResult, LimitReport, LinkageParams, branching_points, limit_report


class UnclassifiedSignPatternError(Exception):
    """T-parameter signs fell outside the covered movement cases."""


class Subclass(Enum):
    STRANGE = "strange"
    RIGID = "rigid"
    REDUCIBLE = "reducible"
    IRREDUCIBLE = "irreducible"


class CrankType(Enum):
    CRANK = "crank"
    ROCKER = "rocker"
    SUPERROCKER = "superrocker"


@dataclass(frozen=True)
class TParams:
    t1: float  # g + b - h - a
    t2: float  # a - g + b - h
    t3: float  # g - a - b - h
    t4: float  # g - a + b + h
    t5: float  # a - h + g + b

    def as_tuple(self) -> tuple[float, float, float, float, float]:
        return (self.t1, self.t2, self.t3, self.t4, self.t5)


@dataclass(frozen=True)
class ClassificationReport:
    t: TParams
    subclass: Subclass
    input_type: CrankType
    output_type: CrankType
    limits: LimitReport
    branching: BranchingResult
    grashof: bool


def t_params(params: LinkageParams) -> TParams:
    a, b, g, h = params.a, params.b, params.g, params.h
    return TParams(
        t1=g + b - h - a,
        t2=a - g + b - h,
        t3=g - a - b - h,
        t4=g - a + b + h,
        t5=a - h + g + b,
    )


def subclass(params: LinkageParams, tol: float = 1e-12) -> Subclass:
    """Strange / rigid / reducible / irreducible, tested in that order.

    Strange: one link strictly exceeds the sum of the other three (beyond
    the tolerance band).  Rigid: one link equals that sum within the band.
    Otherwise irreducible iff both t1 and t2 are nonzero, else reducible.
    All comparisons use the band tol * (a + b + g + h).
    """
    a, b, g, h = params.a, params.b, params.g, params.h
    band = tol * (a + b + g + h)
    excesses = (a - (b + g + h), b - (a + g + h), g - (a + b + h), h - (a + b + g))
    if any(e > band for e in excesses):
        return Subclass.STRANGE
    if any(abs(e) <= band for e in excesses):
        return Subclass.RIGID
    t = t_params(params)
    if abs(t.t1) > band and abs(t.t2) > band:
        return Subclass.IRREDUCIBLE
    return Subclass.REDUCIBLE


def _snap(value: float, zero_tol: float) -> float:
    return 0.0 if abs(value) <= zero_tol else value


def input_type(t: TParams, zero_tol: float = 0.0) -> CrankType:
    """Movement type of the input crank from the signs of t1 t2 and t3 t4.

    crank when t1 t2 >= 0 and t3 t4 <= 0; rocker when t1 t2 < 0 and
    t3 t4 <= 0; superrocker when t1 t2 < 0 and t3 t4 > 0.  The remaining
    pattern corresponds to incompatible movement limits and raises
    UnclassifiedSignPatternError (it is not realizable by positive
    lengths).
    """
    p12 = _snap(t.t1, zero_tol) * _snap(t.t2, zero_tol)
    p34 = _snap(t.t3, zero_tol) * _snap(t.t4, zero_tol)
    if p12 >= 0.0 and p34 <= 0.0:
        return CrankType.CRANK
    if p12 < 0.0 and p34 <= 0.0:
        return CrankType.ROCKER
    if p12 < 0.0 and p34 > 0.0:
        return CrankType.SUPERROCKER
    raise UnclassifiedSignPatternError(f"input sign pattern uncovered for t={t.as_tuple()}")


def output_type(t: TParams, zero_tol: float = 0.0) -> CrankType:
    """Movement type of the output crank from the signs of t1 and t4 t5."""
    t1 = _snap(t.t1, zero_tol)
    p45 = _snap(t.t4, zero_tol) * _snap(t.t5, zero_tol)
    if t1 >= 0.0 and p45 >= 0.0:
        return CrankType.CRANK
    if t1 < 0.0 and p45 >= 0.0:
        return CrankType.ROCKER
    if t1 < 0.0 and p45 < 0.0:
        return CrankType.SUPERROCKER
    raise UnclassifiedSignPatternError(f"output sign pattern uncovered for t={t.as_tuple()}")


def grashof_analog(params: LinkageParams) -> bool:
    """Reversed Grashof-style criterion: longest + shortest >= sum of the middle two."""
    lengths = sorted((params.a, params.b, params.g, params.h))
    return lengths[0] + lengths[3] >= lengths[1] + lengths[2]


def classify(params: LinkageParams, tol: float = 1e-12) -> ClassificationReport:
    """Full report: T-parameters, subclass, crank types, limits, branching, Grashof."""
    t = t_params(params)
    band = tol * (params.a + params.b + params.g + params.h)
    return ClassificationReport(
        t=t,
        subclass=subclass(params, tol),
        input_type=input_type(t, band),
        output_type=output_type(t, band),
        limits=limit_report(params),
        branching=branching_points(params, tol),
        grashof=grashof_analog(params),
    )
