#!/usr/bin/env python3
"""A single rebellion, both ways.

For fractions (3,1,1)/5 the rebel cluster can leave the slim cluster on
either side of the circle: between the fat and slim angles ("right", +)
or through the outer arc ("left", -).  Both orbits connect the same two
equilibria but shift the fat cluster's phase by +alpha2*pi and
-alpha2*pi respectively.  The script traces both branches backward from
the target and draws them in the reduced (x2, x3) plane.
"""

import os

import numpy as np

from kuramoto_rebellions import LEFT, RIGHT, trace_rebellion

OUT = os.path.join(os.path.dirname(__file__), "output")
os.makedirs(OUT, exist_ok=True)

alpha = np.array([3.0, 1.0, 1.0]) / 5.0
results = {s: trace_rebellion(alpha, s) for s in (RIGHT, LEFT)}

print("fractions (alpha1, alpha2, alpha3) =", alpha)
print(f"{'branch':8s} {'stop time':>10s} {'shift/pi':>10s} {'predicted/pi':>13s} "
      f"{'R source':>9s} {'R target':>9s}")
for s, res in results.items():
    print(f"{str(s):8s} {res.stop_time:10.2f} {res.observed_shift / np.pi:10.5f} "
          f"{res.predicted_shift / np.pi:13.5f} {res.trajectory.R_values[0]:9.4f} "
          f"{res.trajectory.R_values[-1]:9.4f}")

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(11, 4.2))
    colors = {RIGHT: "tab:orange", LEFT: "tab:purple"}
    for s, res in results.items():
        x = res.trajectory.states
        ax1.plot(x[:, 1] / np.pi, x[:, 2] / np.pi, color=colors[s],
                 label=f"{s} rebellion")
        for m, style in ((0, "-"), (1, "--"), (2, ":")):
            ax2.plot(res.trajectory.times, x[:, m] / np.pi, style, color=colors[s],
                     lw=1.0 + 2.5 * alpha[m])
    ax1.set_xlabel("x2 / pi (rebel)")
    ax1.set_ylabel("x3 / pi (slim)")
    ax1.set_title("the two stable-manifold branches")
    ax1.legend()
    ax2.set_xlabel("t (forward; source on the left)")
    ax2.set_ylabel("cluster phases / pi")
    ax2.set_title("line width ~ cluster fraction")
    fig.tight_layout()
    path = os.path.join(OUT, "03_two_branches.png")
    fig.savefig(path, dpi=120)
    print(f"\nwrote {path}")
except ImportError:
    print("\nmatplotlib not available; skipped the plot")
