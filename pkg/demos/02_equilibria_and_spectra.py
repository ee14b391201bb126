#!/usr/bin/env python3
"""The three equilibrium classes and their spectra.

All equilibria with zero-mean normalization are: synchrony (R=1),
fat/slim 2-cluster pairs (0 < R = 2*alpha - 1 < 1), or closed unit-bar
linkages (R=0).  For the first two the linearization is known in closed
form; here it is checked against a finite-difference Jacobian, and a
3-bar linkage is solved by the law of cosines.
"""

import numpy as np

from kuramoto_rebellions import (
    classify_state,
    lift,
    linearization_spectrum,
    morse_index,
    solve_3bar_linkage,
    synchrony_equilibrium,
    two_cluster_equilibrium,
    vector_field,
)
from kuramoto_rebellions.core import Partition
from kuramoto_rebellions.equilibria import fd_eigenvalues

N = 8

print(f"equilibria for N = {N}")
print(f"{'class':14s} {'|J|':>4s} {'R':>8s} {'index':>6s}  spectrum (value x mult)")

eq = synchrony_equilibrium(N)
spec = linearization_spectrum(eq)
print(f"{'synchrony':14s} {N:4d} {eq.R:8.4f} {morse_index(eq):6d}  "
      + ", ".join(f"{v:+.3f} x{m}" for v, m in spec.eigenvalues))

for size in range(N // 2 + 1, N):
    eq = two_cluster_equilibrium(range(size), N)
    spec = linearization_spectrum(eq)
    fd = fd_eigenvalues(eq.representative)
    err = np.max(np.abs(fd - spec.as_array()))
    print(f"{'2-cluster':14s} {size:4d} {eq.R:8.4f} {morse_index(eq):6d}  "
          + ", ".join(f"{v:+.3f} x{m}" for v, m in spec.eigenvalues)
          + f"   (fd error {err:.1e})")

print("\n3-bar linkage for fractions (0.4, 0.35, 0.25):")
alpha = np.array([0.4, 0.35, 0.25])
x = solve_3bar_linkage(alpha)
print(f"  angles/pi        = {np.round(x / np.pi, 6)}")
print(f"  phasor residual  = {abs((alpha * np.exp(1j * x)).sum()):.2e}")

part = Partition.consecutive([8, 7, 5])  # N = 20 with the same fractions
theta = lift(part, solve_3bar_linkage(part.fractions))
print(f"  lifted to N = 20: ||f||_inf = {np.max(np.abs(vector_field(theta))):.2e}, "
      f"classified as {classify_state(theta).kind}")
