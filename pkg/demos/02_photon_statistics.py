"""Photon statistics of textbook two-mode states.

Each state is written directly on the photon quadrature grid, expanded in
the discrete Fock basis, and reduced to the correlators used throughout
the package. The grid-operator path computes the same moments without the
Fock basis, so the last column is a consistency check.

What to expect:
  coherent x coherent  g2 = 1, R = 1, Q = 0
  Fock |2> x |2>       g2 = 1/2 (sub-Poissonian, Q = -1) and R = 4
  two-mode squeezed    g2 = 2 in each mode, R = (1 + 1/(2 nbar))^2 > 1
  classical mixture    R <= 1 by the Cauchy-Schwarz inequality

R is the squared form <n_i n_j>^2 / (<n_i(n_i-1)> <n_j(n_j-1)>); any value
above 1 rules out a classical (positive-P) description.

    python demos/02_photon_statistics.py
"""

import math

import numpy as np

from qhhg.grid import Axis
from qhhg.photonics import (PhotonState, correlators, fock_expand, grid_correlator_crosscheck,
                            hermite_functions, relative_discrepancy)

w1, w2 = 0.171, 0.285  # third and fifth harmonic of 0.057 a.u.
axes = tuple(Axis(96, math.sqrt(2 * math.pi / (96 * w))) for w in (w1, w2))
q1, q2 = axes[0].coords, axes[1].coords
chi1 = hermite_functions(16, q1, w1)
chi2 = hermite_functions(16, q2, w2)


def coherent(q, alpha, w):
    return np.exp(-0.5 * w * (q - math.sqrt(2 / w) * alpha.real) ** 2
                  + 1j * math.sqrt(2 * w) * alpha.imag * q)


def from_fock(c):
    """Grid amplitudes for Fock coefficients c[n, m]."""
    return chi1[: c.shape[0]].T @ c @ chi2[: c.shape[1]]


r = 0.3  # two-mode squeezing parameter
tms = np.zeros((17, 17))
for n in range(17):
    tms[n, n] = math.tanh(r) ** n / math.cosh(r)

states = {
    "coherent x coherent": np.outer(coherent(q1, 1.2 + 0.4j, w1), coherent(q2, 0.7 + 0j, w2)),
    "Fock |2> x |2>": np.outer(chi1[2], chi2[2]),
    "two-mode squeezed": from_fock(tms),
}

print(f"{'state':22s} {'g2_ii':>8s} {'g2_jj':>8s} {'R':>8s} {'Q_i':>8s}  grid/Fock")
for name, amp in states.items():
    st = PhotonState(amp, axes, (w1, w2))
    st.grid_amplitudes = st.grid_amplitudes / math.sqrt(st.norm_squared())
    cs = correlators(fock_expand(st, n_max=40))
    disc = relative_discrepancy(grid_correlator_crosscheck(st), cs)
    print(f"{name:22s} {cs.g2_ii:8.4f} {cs.g2_jj:8.4f} {cs.R:8.4f} {cs.Q_i:+8.4f}  {disc:.1e}")
nbar = math.sinh(r) ** 2
print(f"{'':22s} two-mode squeezed prediction R = {(1 + 1 / (2 * nbar)) ** 2:.4f}")

# Averaging moments over a classical mixture of coherent states (not the
# ratios) is what a focal average does; Cauchy-Schwarz keeps R <= 1.
rng = np.random.default_rng(0)
amps = [rng.uniform(0.2, 1.5) for _ in range(20)]
raw = np.mean([correlators(fock_expand(PhotonState(
    np.outer(coherent(q1, complex(a), w1), coherent(q2, complex(0.6 * a), w2)), axes, (w1, w2)),
    n_max=40)).raw() for a in amps], axis=0)
n_i, n_j, s_i, s_j, x = raw
print(f"\nclassical mixture of 20 coherent states: R = {x / math.sqrt(s_i * s_j):.4f}")
