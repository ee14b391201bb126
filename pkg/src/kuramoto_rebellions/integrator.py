"""Fixed-step classical Runge-Kutta (RK4) integration with stop conditions.

The default step 1e-2 matches the runs this package is built to
reproduce; there is deliberately no adaptive stepping, so repeated runs
are bit-for-bit identical.  Backward integration steps with -h, which is
equivalent to integrating the negated rate forward.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .errors import DivergenceError

FORWARD = "forward"
BACKWARD = "backward"


@dataclass(frozen=True)
class IntegrationConfig:
    step: float = 1e-2
    direction: str = FORWARD
    max_steps: int = 10_000_000
    record_every: int = 1

    def __post_init__(self):
        if self.step <= 0:
            raise ValueError("step must be positive")
        if self.direction not in (FORWARD, BACKWARD):
            raise ValueError(f"direction must be '{FORWARD}' or '{BACKWARD}'")
        if self.max_steps < 1:
            raise ValueError("max_steps must be >= 1")
        if self.record_every < 1:
            raise ValueError("record_every must be >= 1")


@dataclass
class Trajectory:
    """Recorded times, states, and order parameters of one integration.

    ``stop_reason`` is one of ``"condition_met"`` (the stop predicate
    fired), ``"max_steps"`` (predicate given but never fired), or
    ``"completed"`` (no predicate; ran exactly ``max_steps`` steps).
    Times are strictly increasing for forward runs and strictly
    decreasing for backward runs.
    """

    times: np.ndarray
    states: np.ndarray
    R_values: np.ndarray
    stop_reason: str

    def __len__(self) -> int:
        return len(self.times)

    def reversed(self) -> "Trajectory":
        """The same samples in reverse order (backward run -> forward view)."""
        return Trajectory(
            times=self.times[::-1].copy(),
            states=self.states[::-1].copy(),
            R_values=self.R_values[::-1].copy(),
            stop_reason=self.stop_reason,
        )


def rk4_step(rate_fn: Callable, y: np.ndarray, h: float) -> np.ndarray:
    """One classical RK4 update y -> y + h/6 (k1 + 2 k2 + 2 k3 + k4)."""
    k1 = rate_fn(y)
    k2 = rate_fn(y + 0.5 * h * k1)
    k3 = rate_fn(y + 0.5 * h * k2)
    k4 = rate_fn(y + h * k3)
    return y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)


def _default_order_param(y: np.ndarray) -> float:
    return float(np.abs(np.exp(1j * y).mean()))


def integrate(
    rate_fn: Callable,
    y0,
    config: IntegrationConfig | None = None,
    stop: Optional[Callable] = None,
    order_param: Optional[Callable] = None,
    t0: float = 0.0,
) -> Trajectory:
    """Integrate ``dy/dt = rate_fn(y)`` from ``y0`` with fixed-step RK4.

    The stop predicate is evaluated after each step; the run ends within
    one step of its first satisfaction.  Samples are recorded every
    ``record_every`` steps, plus the initial and final state.
    ``order_param`` maps a state to the recorded scalar R (default: the
    unweighted mean-phasor modulus, appropriate for full phase states).

    Raises :class:`DivergenceError` if a step produces a non-finite
    state, reporting the last finite step index.
    """
    cfg = config or IntegrationConfig()
    y = np.asarray(y0, dtype=float).copy()
    r_of = order_param or _default_order_param
    h = cfg.step if cfg.direction == FORWARD else -cfg.step

    times = [t0]
    states = [y.copy()]
    r_values = [r_of(y)]
    stop_reason = "completed" if stop is None else "max_steps"

    t = t0
    for k in range(1, cfg.max_steps + 1):
        y = rk4_step(rate_fn, y, h)
        t = t0 + k * h
        if not np.all(np.isfinite(y)):
            raise DivergenceError(step_index=k - 1)
        hit = stop is not None and bool(stop(y))
        if hit or k % cfg.record_every == 0 or k == cfg.max_steps:
            times.append(t)
            states.append(y.copy())
            r_values.append(r_of(y))
        if hit:
            stop_reason = "condition_met"
            break

    return Trajectory(
        times=np.array(times),
        states=np.array(states),
        R_values=np.array(r_values),
        stop_reason=stop_reason,
    )
