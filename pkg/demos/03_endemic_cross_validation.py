"""Cross-validation of the three solution routes on the endemic preset.

The explicit series, the PECE scheme, and the L1 scheme are computed on
the same grid for three fractional orders and compared pairwise in the
max norm; at alpha = 0.99 everything also hugs the classical closed
form.  Artifacts (CSV trajectories, manifests, an SVG plot, and the
summary table) land in out/endemic/.
"""

from pathlib import Path

import numpy as np

from fracsis import (
    Method,
    classical_sis,
    crossing_node,
    format_report_table,
    preset_config,
    run_methods,
    run_table1,
)

OUT = Path("out/endemic")

# Pairwise max-norm distances for alpha in {0.99, 0.7, 0.3}; the series
# and PECE agree to ~1e-5 while L1, a lower-order scheme, sits at
# 1e-3..1e-2 from both.
reports = run_table1(out=OUT, formats=("csv", "json", "svg"))
print(format_report_table(reports))
print(f"\nartifacts in {OUT}/ (per-alpha CSVs + manifest + SVG)")

# alpha close to 1 reproduces the classical epidemic: continuity in the
# fractional order.
cfg = preset_config("c-nonzero", 0.99, methods=("series", "pece", "l1"))
trajs = run_methods(cfg)
ic, _ = classical_sis(cfg.params, cfg.grid.nodes())
print("\nmax distance to the classical solution at alpha = 0.99:")
for method, traj in trajs.items():
    print(f"  {method.value:10s} {np.max(np.abs(traj.u - ic)):.2e}")

# Lower alpha slows the epidemic: the infected curve reaches the
# susceptible one later.
print("\nI/S crossing node (first node with I >= S):")
for alpha in (0.99, 0.3):
    cfg = preset_config("c-nonzero", alpha, methods=("pece",))
    t = crossing_node(run_methods(cfg)[Method.PECE])
    print(f"  alpha={alpha}: t = {t}")
