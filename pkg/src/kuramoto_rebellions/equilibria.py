"""Equilibria: construction, classification, spectra, and linkages.

Under the zero-mean phase normalization, the equilibria of the model
fall into three classes, ordered by decreasing order parameter R and
decreasing stability:

* synchrony (R = 1): all angles equal, totally stable;
* 2-cluster (0 < R = 2*alpha - 1 < 1): a fat majority set J of fraction
  alpha > 1/2 and its slim complement, antipodal to each other, with
  Morse index equal to the slim size;
* linkages (R = 0): unit phasors summing to zero, totally unstable.

The closed-form linearization spectrum at a 2-cluster equilibrium, in
the zero-mean space of dimension N-1, is {+1 (along the invariant
2-cluster line), -R with multiplicity N1-1, +R with multiplicity N2-1}.
A finite-difference Jacobian restricted to the zero-mean subspace serves
as the independent oracle for these values.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

from .core import (
    cluster_order_parameter,
    cluster_vector_field,
    normalize_phases,
    order_parameter,
    vector_field,
    wrap_angle,
)
from .errors import ClassificationError, InvalidFatSetError, NoLinkageError

SYNCHRONY = "synchrony"
TWO_CLUSTER = "two_cluster"
LINKAGE = "linkage"

#: Default residual/angle tolerance for classify_state.  Loose enough for
#: states produced by fixed-step RK4 near equilibria, tight enough to keep
#: the three classes separated by R for N <= 64.
CLASSIFY_TOL = 1e-6


@dataclass(frozen=True)
class Equilibrium:
    """A classified stationary state with its canonical representative.

    ``fat_set`` and ``alpha`` are only set for the 2-cluster class.  The
    representative satisfies the zero-mean normalization; for a fat set J
    of fraction alpha it places (alpha-1)*pi on J and alpha*pi on the
    complement.
    """

    kind: str
    n: int
    R: float
    representative: np.ndarray
    fat_set: Optional[frozenset[int]] = None
    alpha: Optional[float] = None

    @property
    def is_two_cluster(self) -> bool:
        return self.kind == TWO_CLUSTER


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues with multiplicities on the zero-mean space (dim N-1)."""

    eigenvalues: tuple[tuple[float, int], ...]
    space_dim: int

    def __post_init__(self):
        total = sum(mult for _, mult in self.eigenvalues)
        if total != self.space_dim:
            raise ValueError(
                f"multiplicities sum to {total}, expected space dimension {self.space_dim}"
            )

    def as_array(self) -> np.ndarray:
        """All eigenvalues expanded by multiplicity, ascending."""
        values = [v for v, mult in self.eigenvalues for _ in range(mult)]
        return np.sort(np.array(values))

    def positive_count(self) -> int:
        return sum(mult for v, mult in self.eigenvalues if v > 0)


def synchrony_equilibrium(n: int) -> Equilibrium:
    """The totally synchronous equilibrium, represented by the zero state."""
    if n < 2:
        raise ValueError("need at least 2 oscillators")
    return Equilibrium(kind=SYNCHRONY, n=n, R=1.0, representative=np.zeros(n))


def two_cluster_equilibrium(fat_set: Iterable[int], n: int) -> Equilibrium:
    """The 2-cluster equilibrium with fat majority set J.

    Requires N/2 < |J| < N.  The representative has angle (alpha-1)*pi on
    J and alpha*pi on the complement, with alpha = |J|/N, and order
    parameter R = 2*alpha - 1.
    """
    fat = frozenset(int(j) for j in fat_set)
    if not fat or min(fat) < 0 or max(fat) >= n:
        raise InvalidFatSetError(f"fat set must be a nonempty subset of range({n})")
    if len(fat) == n:
        raise InvalidFatSetError("the full index set is the synchrony class, not a 2-cluster")
    if 2 * len(fat) <= n:
        raise InvalidFatSetError(
            f"|J| = {len(fat)} is not a strict majority of N = {n}; "
            "balanced or slim sets give no hyperbolic 2-cluster"
        )
    alpha = len(fat) / n
    theta = np.full(n, alpha * np.pi)
    theta[sorted(fat)] = (alpha - 1.0) * np.pi
    return Equilibrium(
        kind=TWO_CLUSTER,
        n=n,
        R=2.0 * alpha - 1.0,
        representative=theta,
        fat_set=fat,
        alpha=alpha,
    )


def morse_index(eq: Equilibrium) -> int:
    """Unstable dimension in the zero-mean space: 0 for synchrony, N2 = N - |J|
    for a 2-cluster.  Not defined for linkages."""
    if eq.kind == SYNCHRONY:
        return 0
    if eq.kind == TWO_CLUSTER:
        return eq.n - len(eq.fat_set)
    raise ValueError("the Morse index is not defined for linkage equilibria here")


def linearization_spectrum(eq: Equilibrium) -> Spectrum:
    """Closed-form eigenvalues on the zero-mean space.

    Synchrony: -1 with multiplicity N-1.  2-cluster: +1 once (the
    direction along the invariant 2-cluster line), -R on the fat block's
    internal directions (multiplicity N1-1), +R on the slim block's
    (multiplicity N2-1)."""
    if eq.kind == SYNCHRONY:
        return Spectrum(((-1.0, eq.n - 1),), space_dim=eq.n - 1)
    if eq.kind == TWO_CLUSTER:
        n1 = len(eq.fat_set)
        n2 = eq.n - n1
        parts = [(1.0, 1)]
        if n1 > 1:
            parts.append((-eq.R, n1 - 1))
        if n2 > 1:
            parts.append((eq.R, n2 - 1))
        return Spectrum(tuple(parts), space_dim=eq.n - 1)
    raise ValueError("no closed-form spectrum for linkage equilibria here")


def zero_mean_basis(n: int) -> np.ndarray:
    """Orthonormal basis of the zero-average subspace, as columns (n x n-1).

    Column k is proportional to (1,...,1,-k,0,...,0) with k ones; this
    deterministic (Helmert) choice keeps finite-difference Jacobians
    reproducible."""
    q = np.zeros((n, n - 1))
    for k in range(1, n):
        q[:k, k - 1] = 1.0
        q[k, k - 1] = -float(k)
        q[:, k - 1] /= np.sqrt(k * (k + 1.0))
    return q


def jacobian_fd(theta, h: float = 1e-5) -> np.ndarray:
    """Central-difference Jacobian of the vector field on the zero-mean
    subspace, in the orthonormal basis of :func:`zero_mean_basis`.

    Returns an (N-1) x (N-1) matrix.  The flow is a gradient, so the
    exact Jacobian is symmetric in these coordinates."""
    if h <= 0:
        raise ValueError("h must be positive")
    theta = np.asarray(theta, dtype=float)
    n = theta.size
    basis = zero_mean_basis(n)
    columns = [
        basis.T @ ((vector_field(theta + h * basis[:, j]) - vector_field(theta - h * basis[:, j])) / (2.0 * h))
        for j in range(n - 1)
    ]
    return np.column_stack(columns)


def fd_eigenvalues(theta, h: float = 1e-5) -> np.ndarray:
    """Ascending eigenvalues of the finite-difference Jacobian.

    The matrix is symmetrized before the eigen-solve; the exact Jacobian
    is symmetric and the finite-difference asymmetry is O(h^2)."""
    a = jacobian_fd(theta, h)
    return np.linalg.eigvalsh(0.5 * (a + a.T))


def three_cluster_boundary_eigenvalues(alpha, side: int) -> tuple[float, float]:
    """Eigenvalues (mu1, mu2) of the reduced 3-cluster flow at the
    2-cluster equilibrium on side ``side`` (0-based), i.e. where the two
    coordinates other than x_side coincide.

    mu1 = +1 acts along that invariant coincidence line; the transversal
    eigenvalue is mu2 = 2*alpha[side] - 1."""
    a = np.asarray(alpha, dtype=float)
    if a.shape != (3,) or np.any(a <= 0) or abs(a.sum() - 1.0) > 1e-9:
        raise ValueError("alpha must be 3 positive fractions summing to 1")
    if side not in (0, 1, 2):
        raise ValueError("side must be 0, 1, or 2")
    return 1.0, 2.0 * float(a[side]) - 1.0


def solve_3bar_linkage(alpha) -> np.ndarray:
    """Angles (x1, x2, x3) with sum_m alpha_m exp(i x_m) = 0.

    Exists iff every alpha_m < 1/2 (the three side lengths then satisfy
    the strict triangle inequality, since they sum to 1).  Gap angles are
    the triangle's exterior angles, from the law of cosines; the result
    is rotated so that sum_m alpha_m x_m = 0.

    Of the two reflection-related solutions (x and -x), this returns the
    counterclockwise one, ordered x1 < x2 < x3 before rotation.
    """
    a = np.asarray(alpha, dtype=float)
    if a.shape != (3,) or np.any(a <= 0):
        raise ValueError("alpha must be 3 positive fractions")
    if abs(a.sum() - 1.0) > 1e-9:
        raise ValueError(f"fractions sum to {a.sum():.12f}, expected 1")
    if np.any(a >= 0.5):
        raise NoLinkageError(
            "no closed 3-bar linkage for fractions "
            f"({a[0]:g}, {a[1]:g}, {a[2]:g}): a fraction >= 1/2 violates "
            "the strict triangle inequality"
        )
    a1, a2, a3 = a
    # interior angle between sides a_i, a_j (opposite side a_k)
    gamma3 = np.arccos((a1 * a1 + a2 * a2 - a3 * a3) / (2.0 * a1 * a2))
    gamma1 = np.arccos((a2 * a2 + a3 * a3 - a1 * a1) / (2.0 * a2 * a3))
    x = np.array([0.0, np.pi - gamma3, 2.0 * np.pi - gamma3 - gamma1])
    return x - float(a @ x)


def classify_state(theta, tol: float = CLASSIFY_TOL) -> Optional[Equilibrium]:
    """Classify a state as an equilibrium, or return None if it is not one.

    A state with ||vector_field||_inf > tol is not an equilibrium.  An
    equilibrium is classified by its order parameter: R > 1 - tol gives
    synchrony, R < tol a linkage, and otherwise a 2-cluster whose fat set
    collects the indices with wrapped angle within tol of psi (the rest
    must lie within tol of psi + pi, else a :class:`ClassificationError`
    signals numerical pathology).
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    theta = np.asarray(theta, dtype=float)
    n = theta.size
    if float(np.max(np.abs(vector_field(theta)))) > tol:
        return None
    r, psi = order_parameter(theta)
    if r > 1.0 - tol:
        return synchrony_equilibrium(n)
    if r < tol:
        return Equilibrium(
            kind=LINKAGE, n=n, R=r, representative=normalize_phases(theta)
        )
    offsets = wrap_angle(theta - psi)
    near_fat = np.abs(offsets) <= tol
    near_slim = np.minimum(np.abs(offsets - np.pi), np.abs(offsets + np.pi)) <= tol
    if not np.all(near_fat | near_slim):
        raise ClassificationError(
            "equilibrium residual within tolerance but angles are not split "
            "between psi and psi + pi"
        )
    fat = frozenset(int(j) for j in np.flatnonzero(near_fat))
    if 2 * len(fat) <= n:
        raise ClassificationError(
            f"recovered majority set has size {len(fat)} <= N/2, inconsistent with R = {r:.3e}"
        )
    return two_cluster_equilibrium(fat, n)


def classify_cluster_state(alpha, x, tol: float = CLASSIFY_TOL):
    """Classify a cluster state under weights alpha; cluster-level analogue
    of :func:`classify_state`.

    Returns ``(kind, fat_clusters)`` where ``fat_clusters`` is the
    frozenset of cluster indices aligned with psi (empty unless
    2-cluster), or ``(None, frozenset())`` for a non-equilibrium.
    """
    a = np.asarray(alpha, dtype=float)
    x = np.asarray(x, dtype=float)
    if float(np.max(np.abs(cluster_vector_field(a, x)))) > tol:
        return None, frozenset()
    r, psi = cluster_order_parameter(a, x)
    if r > 1.0 - tol:
        return SYNCHRONY, frozenset(range(x.size))
    if r < tol:
        return LINKAGE, frozenset()
    offsets = wrap_angle(x - psi)
    near_fat = np.abs(offsets) <= tol
    near_slim = np.minimum(np.abs(offsets - np.pi), np.abs(offsets + np.pi)) <= tol
    if not np.all(near_fat | near_slim):
        raise ClassificationError("cluster angles are not split between psi and psi + pi")
    return TWO_CLUSTER, frozenset(int(m) for m in np.flatnonzero(near_fat))
