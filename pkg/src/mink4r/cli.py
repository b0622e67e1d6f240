"""Command-line front end: analyze, sweep, trace, sextic, animate.

Exit codes: 0 success, 2 configuration or validation error, 3 domain error
(for example every sample infeasible, or a degenerate coupler point),
4 I/O error.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import replace

from .config import DEFAULT_TOL, JobConfig, ParseError, SweepRange, ValidationError, parse_config
from .coupler_curve import (
    CouplerPoint,
    DegenerateLegError,
    max_total_degree,
    normalized_residual,
    sextic_coefficients,
    trace_curve,
)
from .emit import (
    SWEEP_HEADER,
    TRACE_HEADER,
    analyze_report,
    fnum,
    frame_svg,
    report_to_json,
    report_to_text,
    sweep_rows,
    to_csv,
    trace_rows,
    trace_svg,
)
from .fourbar import (
    BranchingPointError,
    LightlikeOutputError,
    LinkageParams,
    SolveMode,
    pose,
    solve_output_angle,
)

_DEFAULT_RANGE = (-3.0, 3.0)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON config file")
    for name in "abgh":
        common.add_argument(f"--{name}", type=float, help=f"override link length {name}")
    common.add_argument("--mode", choices=["strict", "extended"], help="solver mode")
    common.add_argument("--tol", type=float, help=f"degeneracy tolerance (default {DEFAULT_TOL})")
    common.add_argument("--json", action="store_true", help="machine-readable output where supported")
    common.add_argument("--out", help="output file (default stdout)")

    parser = argparse.ArgumentParser(
        prog="mink4r",
        description="Position analysis and classification of the planar 4R chain "
        "on the Minkowskian plane.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("analyze", parents=[common], help="limits, T-parameters, type, branching")

    p_sweep = sub.add_parser("sweep", parents=[common], help="transmission-function CSV")
    p_sweep.add_argument("--theta-lo", type=float)
    p_sweep.add_argument("--theta-hi", type=float)
    p_sweep.add_argument("--steps", type=int)

    for name, help_text in (
        ("trace", "coupler-curve CSV or SVG"),
        ("sextic", "implicit coupler-curve coefficients and residuals"),
    ):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("--px", type=float, help="coupler point x (moving frame)")
        p.add_argument("--py", type=float, help="coupler point y (moving frame)")
        p.add_argument("--samples", type=int, default=200 if name == "trace" else 100)
        if name == "trace":
            p.add_argument("--format", choices=["csv", "svg"], default="csv")

    p_anim = sub.add_parser("animate", parents=[common], help="SVG frame sequence")
    p_anim.add_argument("--frames", type=int, default=8)
    p_anim.add_argument("--out-dir", required=True)
    return parser


def _merge_config(args: argparse.Namespace) -> JobConfig:
    if args.config is not None:
        with open(args.config, "r", encoding="utf-8") as fh:
            cfg = parse_config(fh.read())
    else:
        lengths = {k: getattr(args, k) for k in "abgh"}
        missing = [k for k, v in lengths.items() if v is None]
        if missing:
            raise ValidationError(
                f"no --config given, so all lengths are required; missing --{' --'.join(missing)}"
            )
        cfg = JobConfig(params=_params_from(lengths))

    overrides = {k: getattr(args, k) for k in "abgh" if getattr(args, k) is not None}
    if overrides and args.config is not None:
        merged = {
            "a": cfg.params.a, "b": cfg.params.b, "g": cfg.params.g, "h": cfg.params.h,
        }
        merged.update(overrides)
        cfg = replace(cfg, params=_params_from(merged))
    if args.mode is not None:
        cfg = replace(cfg, mode=SolveMode(args.mode))
    if args.tol is not None:
        if args.tol <= 0:
            raise ValidationError(f"--tol must be positive, got {args.tol!r}")
        cfg = replace(cfg, tol=args.tol)

    px, py = getattr(args, "px", None), getattr(args, "py", None)
    if (px is None) != (py is None):
        raise ValidationError("--px and --py must be given together")
    if px is not None:
        cfg = replace(cfg, point=CouplerPoint(px, py))

    lo, hi = getattr(args, "theta_lo", None), getattr(args, "theta_hi", None)
    steps = getattr(args, "steps", None)
    if any(v is not None for v in (lo, hi, steps)):
        base = cfg.sweep or SweepRange(*_DEFAULT_RANGE, 64)
        lo = base.lo if lo is None else lo
        hi = base.hi if hi is None else hi
        steps = base.steps if steps is None else steps
        if steps < 2:
            raise ValidationError(f"--steps must be at least 2, got {steps}")
        if not lo < hi:
            raise ValidationError(f"sweep range must satisfy lo < hi, got [{lo!r}, {hi!r}]")
        cfg = replace(cfg, sweep=SweepRange(lo, hi, steps))
    return cfg


def _params_from(lengths: dict) -> LinkageParams:
    try:
        return LinkageParams(**lengths)
    except ValueError as exc:
        raise ValidationError(str(exc)) from exc


def _write_out(args: argparse.Namespace, text: str) -> None:
    if args.out is None:
        sys.stdout.write(text)
    else:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _trace_range(cfg: JobConfig, samples: int) -> tuple[float, float, int]:
    if cfg.sweep is not None:
        return (cfg.sweep.lo, cfg.sweep.hi, samples)
    return (*_DEFAULT_RANGE, samples)


def cmd_analyze(cfg: JobConfig, args: argparse.Namespace) -> int:
    report = analyze_report(cfg)
    _write_out(args, report_to_json(report) if args.json else report_to_text(report))
    return 0


def cmd_sweep(cfg: JobConfig, args: argparse.Namespace) -> int:
    if cfg.sweep is None:
        raise ValidationError("sweep needs a theta range: --theta-lo/--theta-hi/--steps or config")
    rows = sweep_rows(cfg)
    _write_out(args, to_csv(SWEEP_HEADER, rows))
    if not any(row[-1] == "1" for row in rows):
        print("sweep: every sample infeasible", file=sys.stderr)
        return 3
    return 0


def cmd_trace(cfg: JobConfig, args: argparse.Namespace) -> int:
    if cfg.point is None:
        raise ValidationError("trace needs a coupler point: --px/--py or config")
    if args.samples < 2:
        raise ValidationError(f"--samples must be at least 2, got {args.samples}")
    lo, hi, n = _trace_range(cfg, args.samples)
    arcs = trace_curve(cfg.params, cfg.point, lo, hi, n, cfg.mode, cfg.solver_options())
    traced = sum(len(a.points) for a in arcs)
    if args.format == "svg":
        _write_out(args, trace_svg(arcs, cfg.params))
    else:
        _write_out(args, to_csv(TRACE_HEADER, trace_rows(arcs)))
    print(f"trace: {traced} points in {len(arcs)} arcs, skipped samples: {n - _used(arcs)}",
          file=sys.stderr)
    return 0 if traced else 3


def _used(arcs) -> int:
    return len({round(p[0], 15) for a in arcs for p in a.points})


def cmd_sextic(cfg: JobConfig, args: argparse.Namespace) -> int:
    if cfg.point is None:
        raise ValidationError("sextic needs a coupler point: --px/--py or config")
    curve = sextic_coefficients(cfg.params, cfg.point)
    lo, hi, n = _trace_range(cfg, max(args.samples, 2))
    arcs = trace_curve(cfg.params, cfg.point, lo, hi, n, cfg.mode, cfg.solver_options())
    residuals = [
        normalized_residual(curve, x, y) for arc in arcs for _, x, y in arc.points
    ]
    lines = [
        f"coupler point: x={fnum(cfg.point.x)} y={fnum(cfg.point.y)}",
        f"degree: {max_total_degree(curve)}",
        f"normalization scale: {fnum(curve.scale)}",
        "coefficients (monomial, coefficient):",
    ]
    for d in range(7):
        for i in range(d, -1, -1):
            j = d - i
            lines.append(f"  X^{i} Y^{j} {fnum(curve.coeffs[i, j])}")
    if residuals:
        lines.append(
            f"residuals over {len(residuals)} trace points: max = {fnum(max(residuals))}"
        )
    else:
        lines.append("residuals: no feasible trace points in the sampled range")
    _write_out(args, "\n".join(lines) + "\n")
    return 0 if residuals else 3


def cmd_animate(cfg: JobConfig, args: argparse.Namespace) -> int:
    if args.frames < 1:
        raise ValidationError(f"--frames must be at least 1, got {args.frames}")
    lo, hi, _ = _trace_range(cfg, 0)
    os.makedirs(args.out_dir, exist_ok=True)
    manifest: list[list[str]] = []
    rendered = 0
    opts = cfg.solver_options()
    for k in range(args.frames):
        theta = lo if args.frames == 1 else lo + k * (hi - lo) / (args.frames - 1)
        status = "ok"
        sols = []
        try:
            sols = solve_output_angle(cfg.params, theta, cfg.mode, opts)
            if not sols:
                status = "infeasible"
        except BranchingPointError:
            status = "branching"
        except LightlikeOutputError:
            status = "lightlike"
        if sols:
            frame = frame_svg(pose(cfg.params, theta, sols[0]), cfg.params, theta)
            path = os.path.join(args.out_dir, f"frame_{k:04d}.svg")
            with open(path, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(frame)
            rendered += 1
        manifest.append([str(k), fnum(theta), status])
    with open(os.path.join(args.out_dir, "manifest.csv"), "w", encoding="utf-8", newline="\n") as fh:
        fh.write(to_csv(["frame", "theta", "status"], manifest))
    if rendered == 0:
        print("animate: every frame infeasible", file=sys.stderr)
        return 3
    return 0


_COMMANDS = {
    "analyze": cmd_analyze,
    "sweep": cmd_sweep,
    "trace": cmd_trace,
    "sextic": cmd_sextic,
    "animate": cmd_animate,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _merge_config(args)
        return _COMMANDS[args.command](cfg, args)
    except (ParseError, ValidationError) as exc:
        print(f"mink4r: {exc}", file=sys.stderr)
        return 2
    except DegenerateLegError as exc:
        print(f"mink4r: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"mink4r: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
