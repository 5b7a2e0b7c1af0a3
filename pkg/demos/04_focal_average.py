"""Focal averaging of a finished sweep.

A Gaussian focus mixes every intensity between I_min and the peak I0, with
weight g(I) = 1 / (I ln(I0/I_min)). Averaging the moments first and then
forming R washes out the single-intensity oscillations that come from
interfering electron trajectories.

Point this at any directory written by ``qhhg run`` (or by the acceptance
suite); it compares TV(R), the total variation of the single-intensity curve,
with TV(R_av) and prints both curves side by side.

    python demos/04_focal_average.py runs/acceptance/reduced/base
"""

import sys
from pathlib import Path

import numpy as np

from qhhg.focal import FocalEnsemble, averaged_observables, weight_integral
from qhhg.sweep import read_sweep_csv

sweep_dir = Path(sys.argv[1] if len(sys.argv) > 1 else "runs/acceptance/reduced/base")
rows = [(I, c) for I, c, status in read_sweep_csv(sweep_dir / "sweep.csv") if status == "ok"]
I = np.array([r[0] for r in rows])
ens = FocalEnsemble.from_rows(rows, I_min=I[0])

print(f"normalisation check: int g dI over [{I[0]:.3g}, {I[-1]:.3g}] = "
      f"{weight_integral(I[-1], I[0]):.12f}")

R = np.array([c.R for _, c in rows])
R_av = np.array([averaged_observables(ens, I0).R if I0 > I[0] else R[0] for I0 in I])


def tv(y):
    return float(np.sum(np.abs(np.diff(y))))


print(f"\n{'I (1e14 W/cm2)':>15s} {'R(I)':>9s} {'R_av(I0=I)':>11s}")
for i, r, ra in zip(I, R, R_av):
    print(f"{i / 1e14:15.3f} {r:9.3f} {ra:11.3f}")
print(f"\nTV(R) = {tv(R):.3g}   TV(R_av) = {tv(R_av):.3g}   ratio {tv(R) / tv(R_av):.2f}")
