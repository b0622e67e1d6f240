"""Job configuration: JSON ingestion with a strict schema.

Required keys: a, b, g, h (positive numbers).  Optional keys: mode
("strict" | "extended"), tol (positive number), point {"x": .., "y": ..},
sweep {"lo": .., "hi": .., "steps": ..}.  Anything else is rejected with a
diagnostic naming the offending key.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, replace

from .coupler_curve import CouplerPoint
from .fourbar import LinkageParams, SolveMode, SolverOptions


class ParseError(Exception):
    """The configuration text is not valid JSON."""


class ValidationError(Exception):
    """The configuration violates the schema."""


DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class SweepRange:
    lo: float
    hi: float
    steps: int


@dataclass(frozen=True)
class JobConfig:
    params: LinkageParams
    mode: SolveMode = SolveMode.STRICT
    tol: float = DEFAULT_TOL
    point: CouplerPoint | None = None
    sweep: SweepRange | None = None

    def solver_options(self) -> SolverOptions:
        return SolverOptions(branching_tol=self.tol, lightlike_tol=self.tol)


def _require_number(value, where: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)) or not math.isfinite(value):
        raise ValidationError(f"{where} must be a finite number, got {value!r}")
    return float(value)


def _require_mapping(value, where: str, allowed: set[str]) -> dict:
    if not isinstance(value, dict):
        raise ValidationError(f"{where} must be an object")
    for key in value:
        if key not in allowed:
            raise ValidationError(f"unknown key {key!r} in {where}")
    return value


def parse_config(text: str) -> JobConfig:
    """Validate configuration JSON into a JobConfig."""
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"config is not valid JSON: {exc}") from exc
    raw = _require_mapping(raw, "config", {"a", "b", "g", "h", "mode", "tol", "point", "sweep"})

    missing = [k for k in ("a", "b", "g", "h") if k not in raw]
    if missing:
        raise ValidationError(f"missing required length keys: {', '.join(missing)}")
    lengths = {k: _require_number(raw[k], k) for k in ("a", "b", "g", "h")}
    for k, v in lengths.items():
        if v <= 0:
            raise ValidationError(f"length {k} must be positive, got {v!r}")
    cfg = JobConfig(params=LinkageParams(**lengths))

    if "mode" in raw:
        try:
            cfg = replace(cfg, mode=SolveMode(raw["mode"]))
        except ValueError:
            raise ValidationError(f"mode must be 'strict' or 'extended', got {raw['mode']!r}")
    if "tol" in raw:
        tol = _require_number(raw["tol"], "tol")
        if tol <= 0:
            raise ValidationError(f"tol must be positive, got {tol!r}")
        cfg = replace(cfg, tol=tol)
    if "point" in raw:
        obj = _require_mapping(raw["point"], "point", {"x", "y"})
        if "x" not in obj or "y" not in obj:
            raise ValidationError("point needs both x and y")
        cfg = replace(
            cfg,
            point=CouplerPoint(_require_number(obj["x"], "point.x"), _require_number(obj["y"], "point.y")),
        )
    if "sweep" in raw:
        obj = _require_mapping(raw["sweep"], "sweep", {"lo", "hi", "steps"})
        for key in ("lo", "hi", "steps"):
            if key not in obj:
                raise ValidationError(f"sweep needs {key}")
        lo = _require_number(obj["lo"], "sweep.lo")
        hi = _require_number(obj["hi"], "sweep.hi")
        steps = obj["steps"]
        if isinstance(steps, bool) or not isinstance(steps, int):
            raise ValidationError(f"sweep.steps must be an integer, got {steps!r}")
        if steps < 2:
            raise ValidationError(f"sweep.steps must be at least 2, got {steps}")
        if not lo < hi:
            raise ValidationError(f"sweep range must satisfy lo < hi, got [{lo!r}, {hi!r}]")
        cfg = replace(cfg, sweep=SweepRange(lo, hi, steps))
    return cfg
