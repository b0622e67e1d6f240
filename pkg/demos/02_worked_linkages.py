"""The four classic linkage configurations, analyzed end to end.

Each one exercises a different subclass: strange, rigid, reducible and
irreducible.  Run:  python demos/02_worked_linkages.py
"""

from mink4r import LinkageParams
from mink4r.config import JobConfig
from mink4r.emit import analyze_report, report_to_text

CASES = [
    ("strange (ground link dominates)", LinkageParams(1.0, 1.0, 4.0, 1.0)),
    ("rigid (input crank equals the rest)", LinkageParams(1.2, 0.4, 0.4, 0.4)),
    ("reducible (g + b = a + h)", LinkageParams(0.5, 1.0, 2.0, 2.5)),
    ("irreducible (generic lengths)", LinkageParams(0.6, 1.0, 0.7, 0.5)),
]

for title, params in CASES:
    print(f"=== {title} ===")
    print(report_to_text(analyze_report(JobConfig(params=params))))
