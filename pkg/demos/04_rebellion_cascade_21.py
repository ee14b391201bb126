#!/usr/bin/env python3
"""Ten one-man rebellions in a row: the 21-oscillator cascade.

Starting from the 2-cluster equilibrium with an 11-member majority, the
word  + - + - - + - + + +  sends the ten slim oscillators over one at a
time, each on its prescribed side, until the last opponent falls and
the ensemble synchronizes.  Every rebellion drags the fat cluster's
phase by one sign-weighted quantum pi/21; the word sums to +2, so the
majority ends up displaced by 2*pi/21.
"""

import os

import numpy as np

from kuramoto_rebellions import concat_rebellions, parse_symbols

OUT = os.path.join(os.path.dirname(__file__), "output")
os.makedirs(OUT, exist_ok=True)

N = 21
WORD = "+-+--+-+++"

chain = concat_rebellions(N, range(11), WORD)

print(f"N = {N}, initial fat size 11, word {WORD}")
print(f"{'seg':>4s} {'symbol':>7s} {'rebel':>6s} {'duration':>9s} "
      f"{'shift/(pi/21)':>14s}")
for ell, seg in enumerate(chain.segments):
    print(f"{ell + 1:4d} {str(seg.symbol):>7s} {chain.rebels[ell]:6d} "
          f"{-seg.stop_time:9.2f} {seg.observed_shift / (np.pi / N):14.3f}")
print(f"\ncumulative fat shift  = {chain.cumulative_shift / np.pi:.5f} pi")
print(f"predicted (pi/N)*sum s = {chain.predicted_shift / np.pi:.5f} pi")
print(f"final state R          = {chain.trajectory.R_values[-1]:.6f}")
print(f"largest stitch residual = {max(chain.boundary_residuals):.2e}")

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    symbols = parse_symbols(WORD)
    j0 = chain.initial_fat[0]
    fig, ax = plt.subplots(figsize=(9, 4.5))
    t = chain.trajectory.times
    states = chain.trajectory.states
    for ell, (r0, r1) in enumerate(chain.segment_rows):
        rebel = chain.rebels[ell]
        slim = sorted(set(range(N)) - set(chain.initial_fat) - set(chain.rebels[: ell + 1]))
        n1 = 11 + ell
        ax.plot(t[r0:r1], states[r0:r1, j0] / np.pi, color="tab:green",
                lw=0.5 + 0.22 * n1)
        ax.plot(t[r0:r1], states[r0:r1, rebel] / np.pi, color="tab:orange", lw=1.0)
        if slim:
            ax.plot(t[r0:r1], states[r0:r1, slim[0]] / np.pi, color="tab:red",
                    lw=0.5 + 0.22 * len(slim))
    ax.set_xlabel("t")
    ax.set_ylabel("phase / pi")
    ax.set_title(f"cascade of ten one-man rebellions, word {WORD} "
                 "(green fat, orange rebel, red slim)")
    fig.tight_layout()
    path = os.path.join(OUT, "04_cascade_21.png")
    fig.savefig(path, dpi=120)
    print(f"wrote {path}")
except ImportError:
    print("matplotlib not available; skipped the plot")
