"""One intensity on the reference grid, end to end.

Runs the full 8-cycle pulse at 1e14 W/cm2 (a couple of minutes on one
core), then:
  * projects the final state on the electronic ground state,
  * reads off photon numbers and correlators in the 3rd/5th harmonic modes,
  * compares them with the grid-operator path,
  * and prints the harmonic spectrum at odd and even orders.

The two photon modes start in vacuum and are populated only through the
electron dipole, so <n> is tiny (~1e-6) while R can sit well above 1.

    python demos/03_single_intensity.py [intensity_Wcm2]
"""

import sys

import numpy as np

from qhhg.config import load_config, reference_config_path
from qhhg.photonics import analyze
from qhhg.propagation import ground_state, run
from qhhg.spectrum import harmonic_powers, hhg_spectrum

intensity = float(sys.argv[1]) if len(sys.argv) > 1 else 1e14
cfg = load_config(reference_config_path())
params = cfg.model.with_intensity(intensity)
grid = cfg.grid.build(params)
print(f"I = {intensity:.3g} W/cm2, E0 = {params.E0:.5f} a.u., grid {grid.shape}")

gs = ground_state(params, grid, dt=cfg.dt)
print(f"ground-state energy {gs.energy:.6f} a.u.")

res = run(params, grid, dt=cfg.dt, stride=cfg.stride, cap=cfg.cap, initial=gs,
          tail_cycles=cfg.tail_cycles)
print(f"final norm {res.record.norm[-1]:.6f} (the CAP removed the rest)")

an = analyze(res.state, gs.orbital, params.mode_frequencies, n_max=cfg.n_max)
c = an.correlators
print(f"ground-state projection weight {an.photon_state.projection_weight:.6f}")
print(f"<n3> = {c.n_i:.4e}  <n5> = {c.n_j:.4e}")
print(f"g2_33 = {c.g2_ii:.3f}  g2_55 = {c.g2_jj:.3f}  g2_35 = {c.g2_ij:.3f}")
print(f"R = {c.R:.4f}  Q3 = {c.Q_i:.3e}  Q5 = {c.Q_j:.3e}")
print(f"grid vs Fock moments: relative discrepancy {an.discrepancy:.1e}")

orders, power = hhg_spectrum(res.record, params.omega_L, "envelope", params.envelope)
harm = np.arange(1, 32)
p = harmonic_powers(orders, power, harm)
print("\norder  log10 power")
for h, v in zip(harm, p):
    print(f"{h:5d}  {np.log10(v):7.2f}{'' if h % 2 else '   (even)'}")
