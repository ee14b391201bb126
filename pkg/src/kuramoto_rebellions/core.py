"""Core model: states, partitions, vector fields, and symmetries.

The model is the all-to-all sine-coupled phase system with identical
frequencies, normalized to unit coupling and a co-rotating frame:

    dtheta_j/dt = (1/N) sum_k sin(theta_k - theta_j),   j = 1..N.

Angles live on the covering space (unwrapped reals); :func:`wrap_angle`
maps to (-pi, pi] for comparisons mod 2*pi.  Restricting a state to be
constant on the blocks of a partition is flow-invariant and reduces the
system to M cluster angles weighted by the block size fractions alpha_m:

    dx_m/dt = sum_m' alpha_m' sin(x_m' - x_m).

The mean phasor R*exp(i*Psi) = mean_k exp(i*theta_k) supplies the order
parameter; R is a nondecreasing Lyapunov function of the flow, with rate
dR/dt = R * mean_k sin^2(Psi - theta_k).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .errors import ClusterSpreadError

TWO_PI = 2.0 * np.pi

#: Default tolerance for deciding that a state is constant on a block.
CLUSTER_TOL = 1e-9


def wrap_angle(x):
    """Wrap angles to the interval (-pi, pi]."""
    return np.pi - (np.pi - np.asarray(x)) % TWO_PI


def as_phase_state(angles) -> np.ndarray:
    """Coerce to a float vector of N >= 2 finite angles (radians)."""
    theta = np.atleast_1d(np.asarray(angles, dtype=float))
    if theta.ndim != 1 or theta.size < 2:
        raise ValueError(f"a phase state needs at least 2 angles, got shape {theta.shape}")
    if not np.all(np.isfinite(theta)):
        raise ValueError("phase state contains non-finite entries")
    return theta


class OrderParameter(NamedTuple):
    """Polar coordinates (R, psi) of the mean phasor; 0 <= R <= 1.

    When the phasor average vanishes, psi is reported as 0 by convention
    (the argument is undefined there).
    """

    R: float
    psi: float


@dataclass(frozen=True)
class Partition:
    """Ordered disjoint index blocks covering range(n).

    Blocks are tuples of 0-based oscillator indices.  Size fractions are
    exact rationals `sizes[m]/n`; :attr:`fractions` gives them as floats.
    """

    blocks: tuple[tuple[int, ...], ...]
    n: int

    def __post_init__(self):
        seen: set[int] = set()
        for m, block in enumerate(self.blocks):
            if len(block) == 0:
                raise ValueError(f"block {m} is empty")
            if seen.intersection(block):
                raise ValueError(f"block {m} overlaps an earlier block")
            seen.update(block)
        if seen != set(range(self.n)):
            raise ValueError(f"blocks do not cover range({self.n})")

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable[int]], n: int | None = None) -> "Partition":
        tupled = tuple(tuple(int(j) for j in block) for block in blocks)
        if n is None:
            n = sum(len(b) for b in tupled)
        return cls(tupled, n)

    @classmethod
    def two_cluster(cls, fat: Iterable[int], n: int) -> "Partition":
        fat_t = tuple(sorted(int(j) for j in fat))
        slim = tuple(j for j in range(n) if j not in set(fat_t))
        return cls((fat_t, slim), n)

    @classmethod
    def consecutive(cls, sizes: Sequence[int]) -> "Partition":
        """Blocks of the given sizes over consecutive indices."""
        edges = np.concatenate([[0], np.cumsum(sizes)])
        blocks = tuple(tuple(range(int(a), int(b))) for a, b in zip(edges[:-1], edges[1:]))
        return cls(blocks, int(edges[-1]))

    @property
    def m(self) -> int:
        return len(self.blocks)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.blocks)

    @property
    def fractions(self) -> np.ndarray:
        return np.array(self.sizes, dtype=float) / self.n

    @property
    def exact_fractions(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(len(b), self.n) for b in self.blocks)


@dataclass(frozen=True)
class ClusterState:
    """Cluster angles x on the blocks of a partition.

    With ``normalized=True`` the weighted mean sum_m alpha_m x_m must
    vanish (within 1e-12), which pins the free uniform phase shift.
    """

    partition: Partition
    x: np.ndarray
    normalized: bool = False

    def __post_init__(self):
        x = np.asarray(self.x, dtype=float)
        object.__setattr__(self, "x", x)
        if x.shape != (self.partition.m,):
            raise ValueError(
                f"cluster vector has shape {x.shape}, expected ({self.partition.m},)"
            )
        if self.normalized:
            residual = abs(float(self.partition.fractions @ x))
            if residual > 1e-12:
                raise ValueError(f"normalization residual {residual:.3e} exceeds 1e-12")


@dataclass(frozen=True)
class GroupElement:
    """A symmetry (sigma, psi): relabel oscillators by the permutation
    sigma and shift all angles by -psi, acting as out[sigma[j]] = theta[j] - psi.
    """

    sigma: np.ndarray
    psi: float = 0.0

    def __post_init__(self):
        sigma = np.asarray(self.sigma, dtype=int)
        object.__setattr__(self, "sigma", sigma)
        if sorted(sigma.tolist()) != list(range(sigma.size)):
            raise ValueError("sigma is not a permutation of 0..N-1")


def _coerce_fractions(alpha) -> np.ndarray:
    """Accept a Partition or an array of positive weights summing to 1."""
    if isinstance(alpha, Partition):
        return alpha.fractions
    a = np.asarray(alpha, dtype=float)
    if a.ndim != 1 or a.size < 1:
        raise ValueError("fractions must be a 1-d sequence")
    if np.any(a <= 0):
        raise ValueError("all fractions must be positive")
    if abs(a.sum() - 1.0) > 1e-9:
        raise ValueError(f"fractions sum to {a.sum():.12f}, expected 1")
    return a


def vector_field(theta) -> np.ndarray:
    """Rates dtheta_j/dt = (1/N) sum_k sin(theta_k - theta_j).

    Evaluated through the mean phasor z as Im(z * exp(-i*theta_j)), which
    is O(N) and keeps the conservation law mean(rate) = 0 at roundoff
    level.  Total on finite states; rows of equal angles get bit-equal
    rates, so cluster subspaces are preserved exactly.
    """
    theta = np.asarray(theta, dtype=float)
    phasor = np.exp(1j * theta)
    z = phasor.mean(axis=-1, keepdims=True)
    return np.imag(z * np.conj(phasor))


def cluster_vector_field(alpha, x) -> np.ndarray:
    """Cluster rates dx_m/dt = sum_m' alpha_m' sin(x_m' - x_m).

    ``alpha`` may be a :class:`Partition` or any positive weights summing
    to 1 (real weights are allowed).  Conservation: sum_m alpha_m dx_m = 0.
    """
    a = _coerce_fractions(alpha)
    x = np.asarray(x, dtype=float)
    if x.shape[-1] != a.size:
        raise ValueError(f"cluster vector has length {x.shape[-1]}, expected {a.size}")
    phasor = np.exp(1j * x)
    z = (a * phasor).sum(axis=-1, keepdims=True)
    return np.imag(z * np.conj(phasor))


def order_parameter(theta) -> OrderParameter:
    """Order parameter (R, psi) of a full state: R e^{i psi} = mean e^{i theta}."""
    theta = as_phase_state(theta)
    z = np.exp(1j * theta).mean()
    return _polar(z)


def cluster_order_parameter(alpha, x) -> OrderParameter:
    """Order parameter of a cluster state: R e^{i psi} = sum_m alpha_m e^{i x_m}."""
    a = _coerce_fractions(alpha)
    x = np.asarray(x, dtype=float)
    z = (a * np.exp(1j * x)).sum()
    return _polar(z)


#: Below this modulus the mean phasor counts as zero (machine noise for
#: averages of unit phasors) and psi is reported as 0.
R_ZERO = 1e-15


def _polar(z: complex) -> OrderParameter:
    r = min(float(np.abs(z)), 1.0)
    psi = float(np.angle(z)) if r > R_ZERO else 0.0
    return OrderParameter(r, psi)


def lyapunov_rate(theta) -> float:
    """Instantaneous rate dR/dt = R * mean_k sin^2(psi - theta_k) >= 0."""
    theta = as_phase_state(theta)
    r, psi = order_parameter(theta)
    return float(r * np.mean(np.sin(psi - theta) ** 2))


def normalize_phases(theta) -> np.ndarray:
    """Shift a state uniformly so that its angles average to zero."""
    theta = as_phase_state(theta)
    return theta - theta.mean()


def apply_group(g: GroupElement, theta) -> np.ndarray:
    """Act with (sigma, psi): component sigma[j] of the output is theta[j] - psi."""
    theta = as_phase_state(theta)
    if g.sigma.size != theta.size:
        raise ValueError(f"permutation has length {g.sigma.size}, state has {theta.size}")
    out = np.empty_like(theta)
    out[g.sigma] = theta - g.psi
    return out


def lift(partition: Partition, x) -> np.ndarray:
    """Expand cluster angles into a full state: theta_j = x_m for j in block m."""
    x = np.asarray(x, dtype=float)
    if x.shape != (partition.m,):
        raise ValueError(f"cluster vector has shape {x.shape}, expected ({partition.m},)")
    theta = np.empty(partition.n, dtype=float)
    for block, value in zip(partition.blocks, x):
        theta[list(block)] = value
    return theta


def project(partition: Partition, theta, tol: float = CLUSTER_TOL) -> np.ndarray:
    """Collapse a clustered state to its M cluster angles.

    Each block must be constant within ``tol``; otherwise a
    :class:`ClusterSpreadError` names the offending block and its spread.
    Exactly constant blocks return their common value, so
    ``project(p, lift(p, x)) == x`` holds exactly.
    """
    theta = as_phase_state(theta)
    if theta.size != partition.n:
        raise ValueError(f"state has length {theta.size}, expected {partition.n}")
    x = np.empty(partition.m, dtype=float)
    for m, block in enumerate(partition.blocks):
        values = theta[list(block)]
        spread = float(values.max() - values.min())
        if spread > tol:
            raise ClusterSpreadError(m, spread, tol)
        x[m] = values[0] if spread == 0.0 else values.mean()
    return x
