"""Coupler-point trajectories: parametric arcs, SVG output, and the
implicit degree-6 curve that contains every traced point.

Run:  python demos/04_coupler_curves.py
Writes demos/output/coupler_mid.svg.
"""

import os

from mink4r import (
    CouplerPoint,
    LinkageParams,
    SolveMode,
    max_total_degree,
    normalized_residual,
    sextic_coefficients,
    trace_curve,
)
from mink4r.emit import trace_svg

OUT_DIR = os.path.join(os.path.dirname(__file__), "output")
os.makedirs(OUT_DIR, exist_ok=True)

params = LinkageParams(1.0, 1.0, 4.0, 1.0)
mid = CouplerPoint(0.5, 0.0)

arcs = trace_curve(params, mid, -2.0, 2.0, 241, SolveMode.EXTENDED)
print(f"coupler midpoint traced into {len(arcs)} arcs:")
for arc in arcs:
    t0 = arc.points[0][0]
    t1 = arc.points[-1][0]
    print(f"  {arc.root.value:5s}/{arc.branch.value:8s}: {len(arc.points):3d} samples, "
          f"theta in [{t0:+.3f}, {t1:+.3f}]")

svg_path = os.path.join(OUT_DIR, "coupler_mid.svg")
with open(svg_path, "w", newline="\n") as fh:
    fh.write(trace_svg(arcs, params))
print(f"wrote {svg_path}")

print()
curve = sextic_coefficients(params, CouplerPoint(0.5, 0.1))
arcs = trace_curve(params, CouplerPoint(0.5, 0.1), -2.0, 2.0, 121, SolveMode.EXTENDED)
worst = max(
    normalized_residual(curve, x, y) for arc in arcs for _, x, y in arc.points
)
print(f"implicit curve degree: {max_total_degree(curve)}")
print(f"worst normalized residual over {sum(len(a.points) for a in arcs)} "
      f"trace points: {worst:.3e}")
print("largest-magnitude coefficients:")
entries = sorted(
    ((abs(curve.coeffs[i, j]), i, j) for i in range(7) for j in range(7 - i)),
    reverse=True,
)
for mag, i, j in entries[:6]:
    print(f"  X^{i} Y^{j}: {curve.coeffs[i, j]:+.6f}")
