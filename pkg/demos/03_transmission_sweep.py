"""Transmission function psi(theta), including its infeasible gaps.

The strange example only moves where cosh(theta) lies outside the open
interval between its limiting values, so a sweep across [-2, 2] shows a
feasible window near the edges and a gap in the middle (strict mode) or
reversed-branch assemblies filling part of it (extended mode).

Run:  python demos/03_transmission_sweep.py
Writes demos/output/sweep_strict.csv and sweep_extended.csv.
"""

import os

from mink4r import LinkageParams, SolveMode
from mink4r.config import JobConfig, SweepRange
from mink4r.emit import SWEEP_HEADER, sweep_rows, to_csv

OUT_DIR = os.path.join(os.path.dirname(__file__), "output")
os.makedirs(OUT_DIR, exist_ok=True)

params = LinkageParams(1.0, 1.0, 4.0, 1.0)
sweep = SweepRange(-2.0, 2.0, 81)

for mode in (SolveMode.STRICT, SolveMode.EXTENDED):
    cfg = JobConfig(params=params, mode=mode, sweep=sweep)
    rows = sweep_rows(cfg)
    feasible = sum(1 for r in rows if r[-1] == "1")
    gaps = sum(1 for r in rows if r[-1] == "0")
    path = os.path.join(OUT_DIR, f"sweep_{mode.value}.csv")
    with open(path, "w", newline="\n") as fh:
        fh.write(to_csv(SWEEP_HEADER, rows))
    print(f"{mode.value:8s}: {feasible} solution rows, {gaps} infeasible samples -> {path}")

print()
print("first feasible rows (extended):")
cfg = JobConfig(params=params, mode=SolveMode.EXTENDED, sweep=sweep)
shown = 0
for row in sweep_rows(cfg):
    if row[-1] == "1":
        print("  " + ",".join(row))
        shown += 1
    if shown == 4:
        break
