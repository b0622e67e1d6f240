"""Deterministic report, CSV and SVG emission.

All numbers are formatted with Python's shortest round-trip float
representation, all files use LF line endings, and every emitter is a pure
function of its inputs, so repeated runs produce identical bytes.
"""

from __future__ import annotations

import json
import math
from typing import Iterable, Sequence

from .classify import classify
from .config import JobConfig
from .coupler_curve import TracePolyline
from .fourbar import (
    Branch,
    BranchingKind,
    BranchingPointError,
    DomainError,
    LightlikeOutputError,
    LinkageParams,
    Pose,
    Root,
    pose,
    solve_output_angle,
    transmission_angle,
)


def fnum(x: float) -> str:
    """Shortest decimal string that round-trips the float."""
    return repr(float(x))


def _yesno(flag: bool) -> str:
    return "yes" if flag else "no"


# ---------------------------------------------------------------------------
# analyze


def analyze_report(cfg: JobConfig) -> dict:
    """Machine-readable analysis report; survives a JSON round trip unchanged."""
    rep = classify(cfg.params, tol=cfg.tol)
    p = cfg.params
    branching: dict = {"kind": rep.branching.kind.value}
    if rep.branching.kind is BranchingKind.DISCRETE:
        branching["ch_theta"] = rep.branching.ch_theta
        branching["realizable"] = rep.branching.realizable
    return {
        "params": {"a": p.a, "b": p.b, "g": p.g, "h": p.h},
        "t": {f"t{i}": v for i, v in enumerate(rep.t.as_tuple(), start=1)},
        "subclass": rep.subclass.value,
        "input_type": rep.input_type.value,
        "output_type": rep.output_type.value,
        "linkage_type": f"{rep.input_type.value}-{rep.output_type.value}",
        "limits": {
            "ch_theta_min": rep.limits.ch_theta_min,
            "ch_theta_max": rep.limits.ch_theta_max,
            "ch_psi_min": rep.limits.ch_psi_min,
            "ch_psi_max": rep.limits.ch_psi_max,
            "theta_min_exists": rep.limits.theta_min_exists,
            "theta_max_exists": rep.limits.theta_max_exists,
            "psi_min_exists": rep.limits.psi_min_exists,
            "psi_max_exists": rep.limits.psi_max_exists,
        },
        "branching": branching,
        "grashof": rep.grashof,
    }


def report_to_json(report: dict) -> str:
    return json.dumps(report, indent=2) + "\n"


def report_to_text(report: dict) -> str:
    p = report["params"]
    lim = report["limits"]
    t = report["t"]
    lines = [
        f"linkage: a={fnum(p['a'])} b={fnum(p['b'])} g={fnum(p['g'])} h={fnum(p['h'])}",
        f"subclass: {report['subclass']}",
        f"type: {report['linkage_type']}"
        f" (input {report['input_type']}, output {report['output_type']})",
        "T1..T5: " + ", ".join(fnum(t[f"t{i}"]) for i in range(1, 6)),
        f"ch(theta_min) = {fnum(lim['ch_theta_min'])} (exists: {_yesno(lim['theta_min_exists'])})",
        f"ch(theta_max) = {fnum(lim['ch_theta_max'])} (exists: {_yesno(lim['theta_max_exists'])})",
        f"ch(psi_min) = {fnum(lim['ch_psi_min'])} (exists: {_yesno(lim['psi_min_exists'])})",
        f"ch(psi_max) = {fnum(lim['ch_psi_max'])} (exists: {_yesno(lim['psi_max_exists'])})",
    ]
    br = report["branching"]
    if br["kind"] == "discrete":
        lines.append(
            f"branching: discrete at ch(theta) = {fnum(br['ch_theta'])}"
            f" (realizable: {_yesno(br['realizable'])})"
        )
    elif br["kind"] == "none":
        lines.append("branching: none")
    else:
        lines.append("branching: all input angles")
    lines.append(f"grashof analog (l+s >= p+q): {_yesno(report['grashof'])}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# sweep

SWEEP_HEADER = ["theta", "root", "branch", "psi", "phi", "zeta", "feasible"]


def _coupler_phi(params: LinkageParams, theta: float, sol) -> float | None:
    # Recomputed from the actual pivot coordinates so reversed-branch
    # assemblies are covered; None when the coupler direction is not
    # future-pointing spacelike (no real angle exists).
    p = pose(params, theta, sol)
    den = p.b[0] - p.a[0]
    num = p.b[1] - p.a[1]
    if den <= 0.0 or abs(num) >= den:
        return None
    return math.atanh(num / den) - theta + math.pi


def sweep_rows(cfg: JobConfig) -> list[list[str]]:
    """CSV body for the transmission sweep; one row per (sample, solution).

    Infeasible samples (no solution, branching point, isotropic output)
    produce a single row with empty angle fields and feasible=0 so the
    transmission function keeps its gaps.  The zeta field is empty wherever
    the transmission angle is undefined.
    """
    assert cfg.sweep is not None
    sweep = cfg.sweep
    opts = cfg.solver_options()
    rows: list[list[str]] = []
    for i in range(sweep.steps):
        theta = sweep.lo + i * (sweep.hi - sweep.lo) / (sweep.steps - 1)
        try:
            sols = solve_output_angle(cfg.params, theta, cfg.mode, opts)
        except (BranchingPointError, LightlikeOutputError):
            sols = []
        if not sols:
            rows.append([fnum(theta), "", "", "", "", "", "0"])
            continue
        try:
            zeta = fnum(transmission_angle(cfg.params, theta))
        except DomainError:
            zeta = ""
        order = {Root.PLUS: 0, Root.MINUS: 1, Branch.STANDARD: 0, Branch.REVERSED: 1}
        for sol in sorted(sols, key=lambda s: (order[s.root], order[s.branch])):
            phi = _coupler_phi(cfg.params, theta, sol)
            rows.append(
                [
                    fnum(theta),
                    sol.root.value,
                    sol.branch.value,
                    fnum(sol.psi),
                    "" if phi is None else fnum(phi),
                    zeta,
                    "1",
                ]
            )
    return rows


def to_csv(header: Sequence[str], rows: Iterable[Sequence[str]]) -> str:
    lines = [",".join(header)]
    lines.extend(",".join(row) for row in rows)
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# trace

TRACE_HEADER = ["theta", "root", "branch", "X", "Y"]


def trace_rows(polylines: Sequence[TracePolyline]) -> list[list[str]]:
    rows = []
    for arc in polylines:
        for theta, x, y in arc.points:
            rows.append([fnum(theta), arc.root.value, arc.branch.value, fnum(x), fnum(y)])
    return rows


# ---------------------------------------------------------------------------
# SVG

_SVG_STYLE = (
    "fill:none;stroke-linecap:round;stroke-linejoin:round"
)


class _Viewport:
    def __init__(self, xs: list[float], ys: list[float]):
        if not xs:
            xs, ys = [0.0], [0.0]
        xmin, xmax = min(xs), max(xs)
        ymin, ymax = min(ys), max(ys)
        span = max(xmax - xmin, ymax - ymin, 1e-6)
        margin = 0.05 * span
        self.xmin = xmin - margin
        self.xmax = xmax + margin
        self.ymin = ymin - margin
        self.ymax = ymax + margin
        self.stroke = 0.008 * span

    def view_box(self) -> str:
        # SVG y grows downward: world points are emitted as (x, -y).
        w = self.xmax - self.xmin
        h = self.ymax - self.ymin
        return f"{fnum(self.xmin)} {fnum(-self.ymax)} {fnum(w)} {fnum(h)}"

    def pt(self, x: float, y: float) -> str:
        return f"{fnum(x)},{fnum(-y)}"


def _svg_open(vp: _Viewport) -> list[str]:
    return [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="{vp.view_box()}">',
    ]


def _guides(vp: _Viewport) -> list[str]:
    # Asymptote directions y = +-x, drawn across the whole viewport.
    reach = max(abs(vp.xmin), abs(vp.xmax), abs(vp.ymin), abs(vp.ymax))
    w = fnum(vp.stroke * 0.5)
    return [
        f'<g stroke="#bbbbbb" stroke-width="{w}" stroke-dasharray="{fnum(vp.stroke * 4)}" style="{_SVG_STYLE}">',
        f'<path d="M {vp.pt(-reach, -reach)} L {vp.pt(reach, reach)}"/>',
        f'<path d="M {vp.pt(-reach, reach)} L {vp.pt(reach, -reach)}"/>',
        "</g>",
    ]


def _pivot_dots(vp: _Viewport, pivots: Sequence[tuple[str, float, float]]) -> list[str]:
    out = ['<g fill="#222222">']
    for name, x, y in pivots:
        out.append(
            f'<circle cx="{fnum(x)}" cy="{fnum(-y)}" r="{fnum(vp.stroke * 1.6)}">'
            f"<title>{name}</title></circle>"
        )
    out.append("</g>")
    return out


_ARC_COLORS = {
    (Root.PLUS, Branch.STANDARD): "#1f77b4",
    (Root.MINUS, Branch.STANDARD): "#d62728",
    (Root.PLUS, Branch.REVERSED): "#2ca02c",
    (Root.MINUS, Branch.REVERSED): "#9467bd",
}


def trace_svg(polylines: Sequence[TracePolyline], params: LinkageParams) -> str:
    """Standalone SVG of the traced curve with asymptote guides and fixed pivots."""
    xs = [p[1] for arc in polylines for p in arc.points] + [0.0, params.g]
    ys = [p[2] for arc in polylines for p in arc.points] + [0.0, 0.0]
    vp = _Viewport(xs, ys)
    lines = _svg_open(vp)
    lines.extend(_guides(vp))
    lines.extend(_pivot_dots(vp, [("O", 0.0, 0.0), ("C", params.g, 0.0)]))
    for arc in polylines:
        if not arc.points:
            continue
        color = _ARC_COLORS[(arc.root, arc.branch)]
        d = "M " + " L ".join(vp.pt(x, y) for _, x, y in arc.points)
        lines.append(
            f'<path d="{d}" stroke="{color}" stroke-width="{fnum(vp.stroke)}" style="{_SVG_STYLE}"/>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def frame_svg(p: Pose, params: LinkageParams, theta: float) -> str:
    """One animation still: the quadrilateral O-A-B-C with link annotations."""
    xs = [p.o[0], p.a[0], p.b[0], p.c[0]]
    ys = [p.o[1], p.a[1], p.b[1], p.c[1]]
    vp = _Viewport(xs, ys)
    lines = _svg_open(vp)
    links = [
        ("ground g", p.o, p.c, params.g, "#888888"),
        ("input crank a", p.o, p.a, params.a, "#1f77b4"),
        ("coupler h", p.a, p.b, params.h, "#2ca02c"),
        ("output crank b", p.c, p.b, params.b, "#d62728"),
    ]
    font = fnum(vp.stroke * 10)
    for name, u, v, length, color in links:
        lines.append(
            f'<path d="M {vp.pt(*u)} L {vp.pt(*v)}" stroke="{color}"'
            f' stroke-width="{fnum(vp.stroke * 1.5)}" style="{_SVG_STYLE}">'
            f"<title>{name}</title></path>"
        )
        mx, my = (u[0] + v[0]) / 2.0, (u[1] + v[1]) / 2.0
        label = f"{name.split()[-1]}={fnum(length)}"
        lines.append(
            f'<text x="{fnum(mx)}" y="{fnum(-my)}" font-size="{font}" fill="{color}">{label}</text>'
        )
    lines.extend(
        _pivot_dots(vp, [("O", *p.o), ("A", *p.a), ("B", *p.b), ("C", *p.c)])
    )
    lines.append(
        f'<text x="{fnum(vp.xmin + vp.stroke * 4)}" y="{fnum(-vp.ymax + vp.stroke * 14)}"'
        f' font-size="{font}" fill="#222222">theta={fnum(theta)}</text>'
    )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
