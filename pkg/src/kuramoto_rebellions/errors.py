"""Exception hierarchy shared across the package.

Every error raised by the library derives from :class:`KuramotoError`,
so callers (and the command line front end, which maps error classes to
exit codes) can distinguish library failures from programming errors.
"""

from __future__ import annotations


class KuramotoError(Exception):
    """Base class for all library errors."""


class ClusterSpreadError(KuramotoError):
    """A state is not constant on a partition block within tolerance."""

    def __init__(self, block_index: int, spread: float, tol: float):
        self.block_index = block_index
        self.spread = spread
        self.tol = tol
        super().__init__(
            f"block {block_index} has angle spread {spread:.3e} "
            f"above the cluster tolerance {tol:.3e}"
        )


class InvalidFatSetError(KuramotoError):
    """An index set does not qualify as a fat majority cluster."""


class NoLinkageError(KuramotoError):
    """No closed 3-bar linkage exists for the given size fractions."""


class ClassificationError(KuramotoError):
    """A state passes the equilibrium residual test but fits no class."""


class DivergenceError(KuramotoError):
    """Integration produced a non-finite state."""

    def __init__(self, step_index: int):
        self.step_index = step_index
        super().__init__(
            f"non-finite state encountered; last finite step index {step_index}"
        )


class NonConvergenceError(KuramotoError):
    """A backward trace exhausted max_steps before its stop condition."""


class WrongBasinError(KuramotoError):
    """A backward trace terminated at an unexpected equilibrium."""


class OrderingViolationError(KuramotoError):
    """Cluster phases crossed during a run; signals an integration fault."""


class UnconstructibleSwarmError(KuramotoError):
    """A one-sided swarm layout cannot have zero average; use unilateral mode."""


class InvalidVertexError(KuramotoError):
    """A reachability query received a set that is not a graph vertex."""
