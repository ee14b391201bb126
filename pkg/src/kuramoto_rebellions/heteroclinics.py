"""Heteroclinic rebellions: tracing, concatenation, and swarms.

A "rebellion" is a heteroclinic orbit between two 2-cluster equilibria
whose fat set grows by absorbing part of the slim set.  Every such orbit
is a 3-cluster orbit in the coordinates (fat, rebels, remaining slim)
with fractions (alpha1, alpha2, alpha3), alpha1 > 1/2.  Each orbit comes
in two wrap-orderings of the rebel phase x2 on the circle,

    right (+):  x1 < x2 < x3 < x1 + 2*pi,
    left  (-):  x1 < x3 < x2 < x1 + 2*pi,

and shifts the fat cluster phase by s * alpha2 * pi, where s = +1/-1 is
the ordering symbol.  Orbits are traced backward in time from a small
perturbation of the target equilibrium, seeded on the stable-manifold
tangent; the sign of the rebel's seed offset selects the wrap-side:
a positive offset keeps the rebel between the fat and slim angles
(right ordering), a negative offset starts it in the complementary arc
(left ordering).

Concatenations run one segment per symbol with the fat fraction growing
by one oscillator each time; swarm rebellions perturb several one-man
rebel clusters of the full system at once.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import IntEnum
from typing import Iterable, Optional, Sequence

import numpy as np

from .core import (
    Partition,
    cluster_order_parameter,
    cluster_vector_field,
    order_parameter,
    project,
    vector_field,
    wrap_angle,
)
from .equilibria import Equilibrium, synchrony_equilibrium, two_cluster_equilibrium
from .errors import (
    NonConvergenceError,
    OrderingViolationError,
    UnconstructibleSwarmError,
    WrongBasinError,
)
from .integrator import BACKWARD, IntegrationConfig, Trajectory, integrate

TWO_PI = 2.0 * np.pi

#: Wrapped-angle distance within which a trace endpoint must match the
#: expected source equilibrium.
EQUILIBRIUM_TOL = 5e-2


class RebellionSymbol(IntEnum):
    """Wrap-ordering symbol of a rebellion: -1 left, +1 right."""

    LEFT = -1
    RIGHT = +1

    def __str__(self) -> str:
        return "+" if self is RebellionSymbol.RIGHT else "-"


LEFT = RebellionSymbol.LEFT
RIGHT = RebellionSymbol.RIGHT


def parse_symbols(word: str) -> tuple[RebellionSymbol, ...]:
    """Parse a symbol word like '+-+--+' into rebellion symbols."""
    cleaned = word.replace("−", "-").replace(",", "").replace(" ", "")
    if not cleaned:
        raise ValueError("symbol word must contain at least one +/- symbol")
    out = []
    for ch in cleaned:
        if ch == "+":
            out.append(RIGHT)
        elif ch == "-":
            out.append(LEFT)
        else:
            raise ValueError(f"invalid symbol {ch!r}; expected '+' or '-'")
    return tuple(out)


@dataclass
class RebellionResult:
    """One traced rebellion, forward-ordered.

    ``trajectory.states`` hold cluster coordinates weighted by
    ``fractions`` (3 columns for a plain trace, M for a swarm, 2 for the
    final segment into synchrony).  ``stop_time`` is the negative time at
    which the backward run met its stop condition; the forward-ordered
    trajectory runs from ``stop_time`` (source) up to 0 (target).
    """

    source: Optional[Equilibrium]
    target: Optional[Equilibrium]
    trajectory: Trajectory
    fractions: np.ndarray
    observed_shift: float
    predicted_shift: float
    stop_time: float
    symbol: Optional[RebellionSymbol] = None
    details: dict = field(default_factory=dict)


@dataclass
class ConcatResult:
    """A chain of one-man rebellions stitched into one full-space run."""

    segments: list[RebellionResult]
    trajectory: Trajectory
    equilibria: list[Equilibrium]
    rebels: tuple[int, ...]
    initial_fat: tuple[int, ...]
    segment_rows: list[tuple[int, int]]
    boundary_residuals: list[float]
    cumulative_shift: float
    predicted_shift: float


@dataclass(frozen=True)
class SwarmSpec:
    """Specification of a multi-cluster swarm rebellion.

    The rebel set (fat_target minus fat_source) splits into one-man
    clusters; ``m_star`` fixes how many transit on each side: the first
    ``m_star - 1`` rebels (by index) stay between the fat and slim
    angles, the remaining ones transit the complementary arc.  With
    ``unilateral`` set to +1 or -1 the split is ignored and the whole
    swarm moves out on that side, seeded by a common mean offset with a
    much smaller zero-average spread on top.
    """

    n: int
    fat_source: frozenset[int]
    fat_target: frozenset[int]
    m_star: int
    epsilon: float = 1e-2
    unilateral: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "fat_source", frozenset(int(j) for j in self.fat_source))
        object.__setattr__(self, "fat_target", frozenset(int(j) for j in self.fat_target))
        if not self.fat_source < self.fat_target:
            raise ValueError("fat_source must be a strict subset of fat_target")
        if 2 * len(self.fat_source) <= self.n:
            raise ValueError("fat_source must be a strict majority")
        if len(self.fat_target) >= self.n:
            raise ValueError("fat_target must leave a nonempty slim complement")
        if not (1 <= self.m_star < self.cluster_count):
            raise ValueError(f"m_star must lie in [1, {self.cluster_count - 1}]")
        if self.epsilon <= 0:
            raise ValueError("epsilon must be positive")
        if self.unilateral not in (None, -1, 1):
            raise ValueError("unilateral must be None, -1, or +1")

    @property
    def rebels(self) -> tuple[int, ...]:
        return tuple(sorted(self.fat_target - self.fat_source))

    @property
    def cluster_count(self) -> int:
        """M = |rebels| + 2 (fat block, one-man rebels, slim block)."""
        return len(self.fat_target - self.fat_source) + 2

    @property
    def partition(self) -> Partition:
        slim = tuple(j for j in range(self.n) if j not in self.fat_target)
        blocks = (tuple(sorted(self.fat_source)),) + tuple((j,) for j in self.rebels) + (slim,)
        return Partition(blocks, self.n)


def three_cluster_target(alpha) -> np.ndarray:
    """The target 2-cluster equilibrium in 3-cluster coordinates: the fat
    pair (clusters 1 and 2) at (alpha1+alpha2-1)*pi, the slim cluster
    antipodal, normalized to sum_m alpha_m x_m = 0."""
    a = _validate_alpha3(alpha)
    x_plus = (a[0] + a[1] - 1.0) * np.pi
    return np.array([x_plus, x_plus, x_plus + np.pi])


def perturb_near_target(alpha, symbol: RebellionSymbol, eps_mag: float = 1e-2) -> np.ndarray:
    """Seed point near the target: eps = (eps1, eps2, 0) with
    eps2 = -symbol * eps_mag and alpha1*eps1 + alpha2*eps2 = 0.

    The constraint keeps the perturbed state on the same weighted-mean
    normalization as the target and makes eps tangent to the target's
    stable manifold, so the backward orbit through the point traces one
    of the two rebellion branches.  Note the wrap-side of that branch is
    opposite to the rebel's offset sign (see the module docstring);
    :func:`trace_rebellion` therefore seeds with offset +symbol*eps_mag.
    """
    a = _validate_alpha3(alpha)
    if eps_mag <= 0:
        raise ValueError("eps_mag must be positive")
    eps2 = -float(symbol) * eps_mag
    eps1 = -a[1] * eps2 / a[0]
    return three_cluster_target(a) + np.array([eps1, eps2, 0.0])


def predicted_phase_shift(symbols: Sequence[RebellionSymbol], alpha2_list) -> float:
    """Cumulative fat-cluster phase shift sum_l s_l * alpha2_l * pi."""
    a2 = np.asarray(alpha2_list, dtype=float)
    if len(symbols) != a2.size:
        raise ValueError(f"{len(symbols)} symbols but {a2.size} rebel fractions")
    return float(sum(float(s) * a * np.pi for s, a in zip(symbols, a2)))


def _validate_alpha3(alpha) -> np.ndarray:
    a = np.asarray(alpha, dtype=float)
    if a.shape != (3,):
        raise ValueError("alpha must be a triple of fractions")
    if np.any(a <= 0):
        raise ValueError("all fractions must be positive")
    if abs(a.sum() - 1.0) > 1e-9:
        raise ValueError(f"fractions sum to {a.sum():.12f}, expected 1")
    return a


def _backward(config: Optional[IntegrationConfig]) -> IntegrationConfig:
    cfg = config or IntegrationConfig()
    return IntegrationConfig(
        step=cfg.step,
        direction=BACKWARD,
        max_steps=cfg.max_steps,
        record_every=cfg.record_every,
    )


def trace_rebellion(
    alpha,
    symbol: RebellionSymbol,
    config: IntegrationConfig | None = None,
    delta_stop: float = 1e-2,
    eps_mag: float = 1e-2,
    source_tol: float = EQUILIBRIUM_TOL,
    partition: Partition | None = None,
) -> RebellionResult:
    """Trace the 3-cluster rebellion of the given symbol.

    Requires 1/2 < alpha1 < 1 and alpha2, alpha3 > 0.  Starting from a
    seed near the target equilibrium (rebel offset +symbol*eps_mag, which
    realizes the symbol's wrap-ordering), the system integrates backward
    until |wrap(x2 - x3)| < delta_stop, i.e. until the rebel has rejoined
    the slim cluster near the source equilibrium.  The returned result is
    forward-ordered: source at ``stop_time`` < 0, target at time 0.

    The observed fat shift x1(0) - x1(stop_time) must match the predicted
    symbol * alpha2 * pi; the endpoint must lie within ``source_tol`` of
    the source 2-cluster (else :class:`WrongBasinError`).  If ``partition``
    is given (blocks fat/rebel/slim matching alpha), the source and
    target equilibria are attached to the result.
    """
    a = _validate_alpha3(alpha)
    if not 0.5 < a[0] < 1.0:
        raise ValueError(f"alpha1 = {a[0]} must lie in (1/2, 1)")
    symbol = RebellionSymbol(symbol)

    # +symbol offset: rebel seeded inside the fat-slim arc for s=+ (right).
    eps2 = float(symbol) * eps_mag
    eps1 = -a[1] * eps2 / a[0]
    y0 = three_cluster_target(a) + np.array([eps1, eps2, 0.0])

    traj = integrate(
        lambda x: cluster_vector_field(a, x),
        y0,
        _backward(config),
        stop=lambda x: abs(wrap_angle(x[1] - x[2])) < delta_stop,
        order_param=lambda x: cluster_order_parameter(a, x).R,
    )
    if traj.stop_reason != "condition_met":
        raise NonConvergenceError(
            f"backward trace did not meet |wrap(x2 - x3)| < {delta_stop} "
            f"within {len(traj) - 1} recorded steps"
        )
    forward = traj.reversed()
    end = forward.states[0]
    for gap in (end[1] - end[0] - np.pi, end[2] - end[0] - np.pi):
        if abs(wrap_angle(gap)) > source_tol:
            raise WrongBasinError(
                "backward endpoint is not antipodal to the fat cluster within "
                f"{source_tol}: wrapped gap {wrap_angle(gap):.3e}"
            )

    source = target = None
    if partition is not None:
        if partition.m != 3 or not np.allclose(partition.fractions, a):
            raise ValueError("partition blocks do not match the given fractions")
        source = two_cluster_equilibrium(partition.blocks[0], partition.n)
        target = two_cluster_equilibrium(
            partition.blocks[0] + partition.blocks[1], partition.n
        )

    return RebellionResult(
        source=source,
        target=target,
        trajectory=forward,
        fractions=a,
        observed_shift=float(forward.states[-1, 0] - forward.states[0, 0]),
        predicted_shift=float(symbol) * float(a[1]) * np.pi,
        stop_time=float(forward.times[0]),
        symbol=symbol,
    )


def _trace_to_synchrony(
    alpha2: float,
    symbol: RebellionSymbol,
    config: IntegrationConfig | None,
    delta_stop: float,
    eps_mag: float,
    partition: Partition | None,
) -> RebellionResult:
    """Final 2-cluster segment: the whole remaining slim cluster (fraction
    alpha2 < 1/2) falls into synchrony, from the side given by the symbol."""
    a = np.array([1.0 - alpha2, alpha2])
    symbol = RebellionSymbol(symbol)
    eps2 = float(symbol) * eps_mag
    y0 = np.array([-a[1] * eps2 / a[0], eps2])

    traj = integrate(
        lambda x: cluster_vector_field(a, x),
        y0,
        _backward(config),
        stop=lambda x: abs(wrap_angle(x[1] - x[0] - np.pi)) < delta_stop,
        order_param=lambda x: cluster_order_parameter(a, x).R,
    )
    if traj.stop_reason != "condition_met":
        raise NonConvergenceError("backward 2-cluster trace did not reach the source")
    forward = traj.reversed()

    source = target = None
    if partition is not None:
        source = two_cluster_equilibrium(partition.blocks[0], partition.n)
        target = synchrony_equilibrium(partition.n)

    return RebellionResult(
        source=source,
        target=target,
        trajectory=forward,
        fractions=a,
        observed_shift=float(forward.states[-1, 0] - forward.states[0, 0]),
        predicted_shift=float(symbol) * float(a[1]) * np.pi,
        stop_time=float(forward.times[0]),
        symbol=symbol,
    )


def concat_rebellions(
    n_osc: int,
    initial_fat: Iterable[int],
    symbols: Sequence[RebellionSymbol] | str,
    config: IntegrationConfig | None = None,
    delta_stop: float = 1e-2,
    eps_mag: float = 1e-2,
) -> ConcatResult:
    """Concatenate one-man rebellions along a +/- symbol word.

    Starting from the fat majority set J0, each symbol s_l peels the
    lowest-numbered remaining slim oscillator off as a one-man rebel
    (fractions ((|J0|+l-1)/N, 1/N, rest)) and traces its rebellion; a
    final segment whose slim remainder is empty runs as a 2-cluster fall
    into synchrony.  Segments are stitched into one full phase-space
    trajectory: each is lifted to N oscillators and aligned to the
    previous one by a uniform shift plus per-oscillator 2*pi multiples
    (both flow symmetries), anchored so the initial source matches its
    standard representative.  Residual per-boundary mismatches (of order
    delta_stop) are recorded.
    """
    if isinstance(symbols, str):
        symbols = parse_symbols(symbols)
    symbols = tuple(RebellionSymbol(s) for s in symbols)
    fat0 = tuple(sorted(int(j) for j in initial_fat))
    n0 = len(fat0)
    if 2 * n0 <= n_osc:
        raise ValueError(f"|J0| = {n0} must be a strict majority of N = {n_osc}")
    n_seg = len(symbols)
    if not 1 <= n_seg <= n_osc - n0:
        raise ValueError(
            f"word length {n_seg} must lie in [1, {n_osc - n0}] (slim size)"
        )
    slim0 = tuple(j for j in range(n_osc) if j not in set(fat0))
    rebels = slim0[:n_seg]

    segments: list[RebellionResult] = []
    for ell, sym in enumerate(symbols):
        fat = tuple(sorted(fat0 + rebels[:ell]))
        rebel = rebels[ell]
        rest = tuple(sorted(set(slim0) - set(rebels[: ell + 1])))
        n1 = len(fat)
        n3 = n_osc - n1 - 1
        try:
            if n3 > 0:
                part = Partition((fat, (rebel,), rest), n_osc)
                seg = trace_rebellion(
                    np.array([n1, 1, n3], float) / n_osc,
                    sym,
                    config,
                    delta_stop,
                    eps_mag,
                    partition=part,
                )
            else:
                part = Partition((fat, (rebel,)), n_osc)
                seg = _trace_to_synchrony(
                    1.0 / n_osc, sym, config, delta_stop, eps_mag, partition=part
                )
        except (NonConvergenceError, WrongBasinError) as exc:
            raise type(exc)(f"segment {ell + 1} of {n_seg} failed: {exc}") from exc
        seg.details["partition"] = part
        segments.append(seg)

    trajectory, rows, residuals = _stitch(n_osc, fat0, rebels, slim0, segments)
    equilibria = [two_cluster_equilibrium(fat0, n_osc)]
    for ell in range(1, n_seg + 1):
        fat = set(fat0) | set(rebels[:ell])
        equilibria.append(
            synchrony_equilibrium(n_osc)
            if len(fat) == n_osc
            else two_cluster_equilibrium(fat, n_osc)
        )

    j0 = fat0[0]
    return ConcatResult(
        segments=segments,
        trajectory=trajectory,
        equilibria=equilibria,
        rebels=rebels,
        initial_fat=fat0,
        segment_rows=rows,
        boundary_residuals=residuals,
        cumulative_shift=float(trajectory.states[-1, j0] - trajectory.states[0, j0]),
        predicted_shift=predicted_phase_shift(symbols, [1.0 / n_osc] * n_seg),
    )


def _stitch(n_osc, fat0, rebels, slim0, segments):
    """Lift segment cluster trajectories to full space and align them."""
    j0 = fat0[0]
    full_blocks = []
    for ell in range(len(segments)):
        fat = tuple(sorted(set(fat0) | set(rebels[:ell])))
        rest = tuple(sorted(set(slim0) - set(rebels[: ell + 1])))
        blocks = (fat, (rebels[ell],)) + ((rest,) if rest else ())
        full_blocks.append(blocks)

    all_times: list[np.ndarray] = []
    all_states: list[np.ndarray] = []
    residuals: list[float] = []
    rows: list[tuple[int, int]] = []
    t_end = 0.0
    row = 0
    prev_end: np.ndarray | None = None
    for ell, seg in enumerate(segments):
        x = seg.trajectory.states
        lifted = np.empty((x.shape[0], n_osc))
        for m, block in enumerate(full_blocks[ell]):
            lifted[:, list(block)] = x[:, m : m + 1]
        if prev_end is None:
            # anchor the initial source at its standard representative
            offsets = np.full(n_osc, (len(fat0) / n_osc - 1.0) * np.pi - lifted[0, j0])
        else:
            diff = prev_end - lifted[0]
            c = diff[j0]
            offsets = c + TWO_PI * np.round((diff - c) / TWO_PI)
            residuals.append(float(np.max(np.abs(diff - offsets))))
        lifted += offsets
        times = seg.trajectory.times - seg.trajectory.times[0] + t_end
        if prev_end is not None:
            # skip the duplicated boundary sample
            times = times[1:] + (times[1] - times[0])
            lifted = lifted[1:]
        all_times.append(times)
        all_states.append(lifted)
        rows.append((row, row + lifted.shape[0]))
        row += lifted.shape[0]
        t_end = times[-1]
        prev_end = lifted[-1]

    states = np.vstack(all_states)
    times = np.concatenate(all_times)
    r_values = np.abs(np.exp(1j * states).mean(axis=1))
    return (
        Trajectory(times=times, states=states, R_values=r_values, stop_reason="completed"),
        rows,
        residuals,
    )


def _swarm_offsets(spec: SwarmSpec, seed: Optional[int]) -> np.ndarray:
    """Rebel seed offsets: signed layout with exact-sum integer grading.

    Bilateral mode: the first m_star - 1 rebels get positive offsets
    (ascending), the rest negative (magnitudes descending), graded so the
    total is zero and scaled so the largest equals epsilon.  Unilateral
    mode: a common offset of the given sign plus a hundredfold smaller
    zero-average spread that keeps the rebels distinct.
    """
    n_rebels = spec.cluster_count - 2
    rng = np.random.default_rng(seed) if seed is not None else None
    if spec.unilateral is not None:
        spread = np.arange(n_rebels, dtype=float)
        spread -= spread.mean()
        if rng is not None:
            spread += rng.uniform(-0.2, 0.2, n_rebels)
            spread -= spread.mean()
        return spec.unilateral * spec.epsilon + 0.01 * spec.epsilon * spread / max(
            1.0, float(np.max(np.abs(spread)))
        )

    n_right = spec.m_star - 1
    n_left = n_rebels - n_right
    if n_right == 0 or n_left == 0:
        raise UnconstructibleSwarmError(
            f"m_star = {spec.m_star} puts all {n_rebels} rebels on one side; "
            "a one-sided signed layout cannot average to zero - use unilateral mode"
        )
    # integer grading with exactly equal side sums: right k*S_l, left k*S_r
    s_right = n_right * (n_right + 1) // 2
    s_left = n_left * (n_left + 1) // 2
    right = np.arange(1, n_right + 1, dtype=float) * s_left
    left = -np.arange(n_left, 0, -1, dtype=float) * s_right
    raw = np.concatenate([right, left])
    if rng is not None:
        # +-5 percent jitter is far below the grading gaps, so it cannot
        # reorder or flip any offset; re-center to restore the zero sum
        raw = raw * (1.0 + rng.uniform(-0.05, 0.05, n_rebels))
        raw = raw - raw.mean()
    return spec.epsilon * raw / float(np.max(np.abs(raw)))


def swarm_initial_condition(
    spec: SwarmSpec,
    target: Equilibrium | None = None,
    seed: Optional[int] = None,
) -> np.ndarray:
    """Full-space seed near the swarm's target equilibrium.

    The returned state is exactly constant on fat_source and on the slim
    complement of fat_target (both blocks sit at the target's two
    angles); only the rebel indices are offset, with zero average, so the
    state keeps the target's zero-mean normalization to roundoff.
    """
    if target is None:
        target = two_cluster_equilibrium(spec.fat_target, spec.n)
    theta = target.representative.copy()
    offsets = _swarm_offsets(spec, seed)
    theta[list(spec.rebels)] += offsets
    return theta


def _check_swarm_ordering(spec: SwarmSpec, x: np.ndarray, row: int) -> None:
    """Verify the time-invariant wrap-ordering of the M cluster phases.

    Cluster columns are (fat, rebels..., slim).  Relative to the fat
    phase, the first m_star - 1 rebels must precede the slim cluster and
    the remaining rebels must follow it, all strictly ordered.
    """
    m = spec.cluster_count
    gaps = (x[1:] - x[0]) % TWO_PI  # rebels then slim, relative to fat
    rebel_gaps, slim_gap = gaps[:-1], gaps[-1]
    if spec.unilateral is None:
        n_right = spec.m_star - 1
        seq = np.concatenate([rebel_gaps[:n_right], [slim_gap], rebel_gaps[n_right:]])
    elif spec.unilateral > 0:
        seq = np.concatenate([rebel_gaps, [slim_gap]])
    else:
        seq = np.concatenate([[slim_gap], rebel_gaps])
    if not (np.all(np.diff(seq) > 0) and 0 < seq[0] and seq[-1] < TWO_PI):
        raise OrderingViolationError(
            f"cluster wrap-ordering violated at recorded row {row}; "
            "the ordering is time-invariant, so this signals an integration fault"
        )


def run_swarm(
    spec: SwarmSpec,
    config: IntegrationConfig | None = None,
    delta_stop: float = 1e-2,
    seed: Optional[int] = None,
) -> RebellionResult:
    """Trace a swarm rebellion backward from its target to its source.

    The full N-oscillator system is integrated backward from
    :func:`swarm_initial_condition` until every oscillator outside
    fat_source is within ``delta_stop`` (wrapped) of the antipode of the
    fat phase, i.e. until the state reaches the source 2-cluster.  The
    run stays exactly inside the fixed subspace (constant on fat_source
    and on the slim complement); the cluster wrap-ordering is checked at
    every recorded step.

    The returned trajectory holds the M cluster coordinates, forward
    ordered, gauge-fixed by a uniform shift (a flow symmetry) so that the
    source matches its standard representative at (alpha_source - 1)*pi.
    ``observed_shift`` is the fat phase drift; ``predicted_shift`` is
    (n_right - n_left)*pi/N for the interval-ordering convention, with
    the caption-style alternative (m_star right rebels) in ``details``.
    """
    part = spec.partition
    fractions = part.fractions
    fat_idx = sorted(spec.fat_source)
    outside = [j for j in range(spec.n) if j not in spec.fat_source]
    y0 = swarm_initial_condition(spec, seed=seed)

    def stop(theta: np.ndarray) -> bool:
        gaps = wrap_angle(theta[outside] - theta[fat_idx[0]] - np.pi)
        return bool(np.max(np.abs(gaps)) < delta_stop)

    traj = integrate(
        vector_field,
        y0,
        _backward(config),
        stop=stop,
        order_param=lambda th: order_parameter(th).R,
    )
    if traj.stop_reason != "condition_met":
        raise NonConvergenceError(
            f"swarm run did not reach the source within {len(traj) - 1} recorded steps"
        )
    forward = traj.reversed()

    # exact fixed-subspace membership, then reduce to cluster coordinates
    spread = 0.0
    cluster_states = np.empty((len(forward), part.m))
    for i, theta in enumerate(forward.states):
        cluster_states[i] = project(part, theta)
        for block in (fat_idx, [j for j in range(spec.n) if j not in spec.fat_target]):
            spread = max(spread, float(np.ptp(theta[list(block)])))
        _check_swarm_ordering(spec, cluster_states[i], row=i)

    # gauge: anchor the source at its standard representative
    alpha_source = len(spec.fat_source) / spec.n
    shift = (alpha_source - 1.0) * np.pi - cluster_states[0, 0]
    cluster_states += shift

    n_rebels = part.m - 2
    if spec.unilateral is None:
        n_right = spec.m_star - 1
    else:
        n_right = n_rebels if spec.unilateral > 0 else 0
    n_left = n_rebels - n_right
    predicted = (n_right - n_left) * np.pi / spec.n

    return RebellionResult(
        source=two_cluster_equilibrium(spec.fat_source, spec.n),
        target=two_cluster_equilibrium(spec.fat_target, spec.n),
        trajectory=Trajectory(
            times=forward.times.copy(),
            states=cluster_states,
            R_values=forward.R_values.copy(),
            stop_reason=forward.stop_reason,
        ),
        fractions=fractions,
        observed_shift=float(cluster_states[-1, 0] - cluster_states[0, 0]),
        predicted_shift=float(predicted),
        stop_time=float(forward.times[0]),
        details={
            "n_right": n_right,
            "n_left": n_left,
            "max_fixed_block_spread": spread,
            "gauge_shift": float(shift),
            # if instead one counts m_star right rebels (the other reading
            # of the split), the predicted drift flips accordingly:
            "predicted_shift_alternative": float(
                (min(spec.m_star, n_rebels) - (n_rebels - min(spec.m_star, n_rebels)))
                * np.pi
                / spec.n
            ),
        },
    )
