#!/usr/bin/env python3
"""Order parameter basics: R(t) never decreases.

Integrates a handful of random 16-oscillator states and a perturbed
2-cluster state, tracking the mean-phasor modulus R.  Every trajectory
climbs monotonically toward synchrony (R = 1); the 2-cluster start
lingers near its equilibrium value R = 2*alpha - 1 before the slim
cluster finally gives way.
"""

import os

import numpy as np

from kuramoto_rebellions import (
    IntegrationConfig,
    integrate,
    lyapunov_rate,
    order_parameter,
    two_cluster_equilibrium,
    vector_field,
)

OUT = os.path.join(os.path.dirname(__file__), "output")
os.makedirs(OUT, exist_ok=True)

rng = np.random.default_rng(1)
cfg = IntegrationConfig(step=1e-2, max_steps=8000, record_every=20)

runs = {}
for k in range(4):
    theta0 = rng.uniform(-np.pi, np.pi, 16)
    runs[f"random {k}"] = integrate(vector_field, theta0, cfg)

eq = two_cluster_equilibrium(range(10), 16)
theta0 = eq.representative + rng.uniform(-1e-3, 1e-3, 16)
runs["perturbed 2-cluster (alpha=5/8)"] = integrate(vector_field, theta0, cfg)

print(f"{'run':36s} {'R(0)':>8s} {'R(T)':>8s} {'min dR':>10s}")
for name, traj in runs.items():
    dr = np.diff(traj.R_values).min()
    print(f"{name:36s} {traj.R_values[0]:8.4f} {traj.R_values[-1]:8.4f} {dr:10.2e}")

theta = rng.uniform(-np.pi, np.pi, 16)
print("\nspot check of the growth rate at a random state:")
print(f"  lyapunov_rate  = {lyapunov_rate(theta):.8f}")
h = 1e-6
f = vector_field(theta)
fd = (order_parameter(theta + h * f).R - order_parameter(theta - h * f).R) / (2 * h)
print(f"  central diff   = {fd:.8f}")

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(7, 4))
    for name, traj in runs.items():
        ax.plot(traj.times, traj.R_values, label=name)
    ax.set_xlabel("t")
    ax.set_ylabel("R")
    ax.set_ylim(0, 1.02)
    ax.legend(fontsize=8)
    ax.set_title("the order parameter is a Lyapunov function")
    fig.tight_layout()
    path = os.path.join(OUT, "01_order_parameter.png")
    fig.savefig(path, dpi=120)
    print(f"\nwrote {path}")
except ImportError:
    print("\nmatplotlib not available; skipped the plot")
