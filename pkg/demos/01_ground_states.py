"""Ground states of the model atoms.

Imaginary-time relaxation on the electronic axis alone. The soft-Coulomb
well with b = 0.816 is tuned to the neon ionisation potential (0.7925 a.u.);
the screened variant binds more deeply. A harmonic well is included as a
sanity check with a closed-form answer. The electronic potential always
carries the self-dipole term lambda^2 x^2, which stiffens the harmonic well
to omega_eff = sqrt(omega^2 + 2 lambda^2).

    python demos/01_ground_states.py
"""

import math

from qhhg.grid import Axis
from qhhg.model import HarmonicWell, ModelParams, ScreenedSoftCoulomb, SoftCoulomb, electronic_potential
from qhhg.propagation import relax_orbital

axis = Axis(256, 0.5)

for label, pot, expected in [
    ("soft-Coulomb b=0.816", SoftCoulomb(0.816), -0.7925),
    ("screened soft-Coulomb", ScreenedSoftCoulomb(), -0.9037),
    ("harmonic, omega=0.3", HarmonicWell(0.3), 0.5 * math.sqrt(0.09 + 2 * 0.01**2)),
]:
    v = electronic_potential(ModelParams(potential=pot), axis.coords)
    _, energy, _, _ = relax_orbital(v, axis, tol=1e-11)
    print(f"{label:24s} E = {energy:+.6f}  (expected {expected:+.4f})")
