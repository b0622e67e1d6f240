"""Still-frame export of the moving quadrilateral, one SVG per feasible
input angle, with a manifest recording skipped (infeasible) frames.

Run:  python demos/05_animation_frames.py
Writes demos/output/frames/frame_*.svg and manifest.csv.
"""

import os

from mink4r.cli import main

OUT_DIR = os.path.join(os.path.dirname(__file__), "output", "frames")

code = main(
    [
        "animate",
        "--a", "1.2", "--b", "0.4", "--g", "0.4", "--h", "0.4",
        "--frames", "12",
        "--out-dir", OUT_DIR,
    ]
)
print(f"exit code: {code}")
with open(os.path.join(OUT_DIR, "manifest.csv")) as fh:
    print(fh.read())
