"""Global heteroclinic structure of the equal-frequency Kuramoto model.

A numpy library for constructing and classifying the equilibria of the
normalized all-to-all phase-oscillator model, tracing the 3-cluster
"rebellion" heteroclinic orbits between them by backward integration,
concatenating one-man rebellions along prescribed +/- symbol words,
realizing multi-cluster swarm rebellions, and building the fat-subset
connection graph.
"""

from .core import (
    ClusterState,
    GroupElement,
    OrderParameter,
    Partition,
    apply_group,
    as_phase_state,
    cluster_order_parameter,
    cluster_vector_field,
    lift,
    lyapunov_rate,
    normalize_phases,
    order_parameter,
    project,
    vector_field,
    wrap_angle,
)
from .equilibria import (
    Equilibrium,
    Spectrum,
    classify_state,
    jacobian_fd,
    linearization_spectrum,
    morse_index,
    solve_3bar_linkage,
    synchrony_equilibrium,
    three_cluster_boundary_eigenvalues,
    two_cluster_equilibrium,
)
from .heteroclinics import (
    LEFT,
    RIGHT,
    ConcatResult,
    RebellionResult,
    RebellionSymbol,
    SwarmSpec,
    concat_rebellions,
    parse_symbols,
    perturb_near_target,
    predicted_phase_shift,
    run_swarm,
    swarm_initial_condition,
    three_cluster_target,
    trace_rebellion,
)
from .connection_graph import (
    ConnectionGraph,
    GraphVertex,
    build_graph,
    export_dot,
    export_json,
    graph_from_json,
    reachable,
    vertex_count,
)
from .integrator import (
    BACKWARD,
    FORWARD,
    IntegrationConfig,
    Trajectory,
    integrate,
    rk4_step,
)
from . import errors

__version__ = "0.1.0"

__all__ = [
    "BACKWARD",
    "FORWARD",
    "LEFT",
    "RIGHT",
    "ClusterState",
    "ConcatResult",
    "ConnectionGraph",
    "Equilibrium",
    "GraphVertex",
    "GroupElement",
    "IntegrationConfig",
    "OrderParameter",
    "Partition",
    "RebellionResult",
    "RebellionSymbol",
    "Spectrum",
    "SwarmSpec",
    "Trajectory",
    "apply_group",
    "as_phase_state",
    "build_graph",
    "classify_state",
    "cluster_order_parameter",
    "cluster_vector_field",
    "concat_rebellions",
    "errors",
    "export_dot",
    "export_json",
    "graph_from_json",
    "integrate",
    "jacobian_fd",
    "lift",
    "linearization_spectrum",
    "lyapunov_rate",
    "morse_index",
    "normalize_phases",
    "order_parameter",
    "parse_symbols",
    "perturb_near_target",
    "predicted_phase_shift",
    "project",
    "reachable",
    "rk4_step",
    "run_swarm",
    "solve_3bar_linkage",
    "swarm_initial_condition",
    "synchrony_equilibrium",
    "three_cluster_boundary_eigenvalues",
    "three_cluster_target",
    "trace_rebellion",
    "two_cluster_equilibrium",
    "vector_field",
    "vertex_count",
    "wrap_angle",
]
