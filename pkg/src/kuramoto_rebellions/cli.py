"""Command line front end.

Subcommands: ``simulate`` (integrate a full state and emit t, angles, R,
Psi), ``equilibrium`` (construct/verify an equilibrium report),
``trace`` / ``concat`` / ``swarm`` (heteroclinic runs, per-segment CSV
plus a JSON summary), and ``graph`` (DOT or JSON export of the
connection graph).

Angles are emitted on the covering space (unwrapped); pass ``--wrap``
for torus plots.  Oscillator indices are 0-based everywhere.  Exit
codes: 0 success, 2 validation or parse error, 3 divergence, 4 no
linkage, 5 non-convergence, 6 wrong basin, 7 ordering violation.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .connection_graph import build_graph, export_dot, export_json, vertex_count
from .core import order_parameter, vector_field, wrap_angle
from .equilibria import (
    LINKAGE,
    fd_eigenvalues,
    linearization_spectrum,
    morse_index,
    solve_3bar_linkage,
    synchrony_equilibrium,
    two_cluster_equilibrium,
)
from .errors import (
    DivergenceError,
    KuramotoError,
    NoLinkageError,
    NonConvergenceError,
    OrderingViolationError,
    WrongBasinError,
)
from .heteroclinics import (
    SwarmSpec,
    concat_rebellions,
    parse_symbols,
    run_swarm,
    trace_rebellion,
)
from .integrator import IntegrationConfig, integrate

EXIT_VALIDATION = 2
EXIT_DIVERGENCE = 3
EXIT_NO_LINKAGE = 4
EXIT_NON_CONVERGENCE = 5
EXIT_WRONG_BASIN = 6
EXIT_ORDERING = 7


@dataclass(frozen=True)
class RunConfig:
    """Numerical knobs shared by the run subcommands."""

    step: float = 1e-2
    eps_mag: float = 1e-2
    delta_stop: float = 1e-2
    max_steps: int = 10_000_000
    record_every: int = 1
    seed: Optional[int] = None
    output_path: str = "."
    fmt: str = "csv"

    def __post_init__(self):
        for name in ("step", "eps_mag", "delta_stop"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")

    def integration(self) -> IntegrationConfig:
        return IntegrationConfig(
            step=self.step, max_steps=self.max_steps, record_every=self.record_every
        )


def _parse_angles(text: str) -> np.ndarray:
    """Inline comma/space separated angles, or a path to a file of them."""
    if os.path.exists(text):
        with open(text) as fh:
            text = fh.read()
    parts = text.replace(",", " ").split()
    if not parts:
        raise ValueError("no angles given")
    return np.array([float(p) for p in parts])


def _parse_index_set(text: str, n: int) -> frozenset[int]:
    """A comma list of 0-based indices, or a bare count k meaning 0..k-1."""
    parts = [p for p in text.replace(",", " ").split() if p]
    values = [int(p) for p in parts]
    if len(values) == 1 and values[0] > 0 and "," not in text and values[0] <= n:
        return frozenset(range(values[0]))
    return frozenset(values)


def _maybe_wrap(states: np.ndarray, wrap: bool) -> np.ndarray:
    return wrap_angle(states) if wrap else states


def _write_state_csv(path, traj, wrap: bool) -> None:
    states = _maybe_wrap(traj.states, wrap)
    n = states.shape[1]
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["t"] + [f"theta_{j}" for j in range(n)] + ["R", "Psi"])
        for t, row in zip(traj.times, states):
            r, psi = order_parameter(row)
            writer.writerow([repr(float(t))] + [repr(float(v)) for v in row]
                            + [repr(float(r)), repr(float(psi))])


def _write_cluster_csv(path, times, states, sizes, r_values, wrap: bool) -> None:
    """Cluster trajectory layout: t, x_1..x_M, N_1..N_M, R.  The size
    columns let plot scripts draw line thickness by cluster size."""
    states = _maybe_wrap(np.asarray(states), wrap)
    m = states.shape[1]
    sizes = np.broadcast_to(np.asarray(sizes, dtype=float), (states.shape[0], m))
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(
            ["t"] + [f"x_{mm + 1}" for mm in range(m)]
            + [f"N_{mm + 1}" for mm in range(m)] + ["R"]
        )
        for t, row, size_row, r in zip(times, states, sizes, r_values):
            writer.writerow(
                [repr(float(t))]
                + [repr(float(v)) for v in row]
                + [repr(float(s)) for s in size_row]
                + [repr(float(r))]
            )


def _write_json(path, payload) -> None:
    text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _spectrum_payload(eq) -> list[list[float]]:
    return [[value, mult] for value, mult in linearization_spectrum(eq).eigenvalues]


def cmd_simulate(args) -> int:
    theta0 = _parse_angles(args.initial)
    if theta0.size < 2:
        raise ValueError("need at least 2 oscillators")
    if args.T <= 0:
        raise ValueError("T must be positive")
    steps = max(1, round(args.T / args.step))
    cfg = IntegrationConfig(step=args.step, max_steps=steps, record_every=args.record_every)
    traj = integrate(vector_field, theta0, cfg)
    _write_state_csv(args.output, traj, args.wrap)
    return 0


def cmd_equilibrium(args) -> int:
    if args.linkage:
        alpha = np.array([float(p) for p in args.linkage.replace(",", " ").split()])
        x = solve_3bar_linkage(alpha)
        residual = float(abs((alpha * np.exp(1j * x)).sum()))
        _write_json(args.output, {
            "kind": LINKAGE,
            "alpha": [float(a) for a in alpha],
            "angles": [float(v) for v in x],
            "phasor_residual": residual,
            "normalization": float(alpha @ x),
        })
        return 0
    if args.fat_set is None:
        eq = synchrony_equilibrium(args.n)
    else:
        eq = two_cluster_equilibrium(_parse_index_set(args.fat_set, args.n), args.n)
    payload = {
        "kind": eq.kind,
        "n": eq.n,
        "R": eq.R,
        "alpha": eq.alpha,
        "fat_set": sorted(eq.fat_set) if eq.fat_set is not None else None,
        "morse_index": morse_index(eq),
        "spectrum": _spectrum_payload(eq),
        "representative": [float(v) for v in eq.representative],
    }
    if args.verify:
        fd = fd_eigenvalues(eq.representative)
        closed = linearization_spectrum(eq).as_array()
        payload["verify"] = {
            "fd_eigenvalues": [float(v) for v in fd],
            "max_abs_difference": float(np.max(np.abs(fd - closed))),
        }
    _write_json(args.output, payload)
    return 0


def cmd_trace(args) -> int:
    raw = np.array([float(p) for p in args.alpha.replace(",", " ").split()])
    alpha = raw / raw.sum()
    run = RunConfig(step=args.step, eps_mag=args.eps_mag, delta_stop=args.delta_stop,
                    record_every=args.record_every)
    result = trace_rebellion(
        alpha, parse_symbols(args.symbol)[0], run.integration(),
        delta_stop=run.delta_stop, eps_mag=run.eps_mag,
    )
    os.makedirs(args.output_dir, exist_ok=True)
    csv_path = os.path.join(args.output_dir, "trace.csv")
    sizes = raw if np.allclose(raw, np.round(raw)) and raw.sum() > 1 else alpha
    _write_cluster_csv(csv_path, result.trajectory.times, result.trajectory.states,
                       sizes, result.trajectory.R_values, args.wrap)
    _write_json(os.path.join(args.output_dir, "trace.json"), {
        "alpha": [float(a) for a in alpha],
        "symbol": str(result.symbol),
        "observed_shift": result.observed_shift,
        "predicted_shift": result.predicted_shift,
        "stop_time": result.stop_time,
        "csv": csv_path,
    })
    return 0


def cmd_concat(args) -> int:
    symbols = parse_symbols(args.symbols)
    fat0 = _parse_index_set(args.fat_set, args.n)
    run = RunConfig(step=args.step, eps_mag=args.eps_mag, delta_stop=args.delta_stop,
                    record_every=args.record_every)
    result = concat_rebellions(args.n, fat0, symbols, run.integration(),
                               delta_stop=run.delta_stop, eps_mag=run.eps_mag)
    os.makedirs(args.output_dir, exist_ok=True)

    seg_files = []
    for ell, seg in enumerate(result.segments, start=1):
        path = os.path.join(args.output_dir, f"segment_{ell:02d}.csv")
        m = seg.trajectory.states.shape[1]
        n1 = len(result.initial_fat) + ell - 1
        sizes = [n1, 1, args.n - n1 - 1][:m]
        _write_cluster_csv(path, seg.trajectory.times, seg.trajectory.states,
                           sizes, seg.trajectory.R_values, args.wrap)
        seg_files.append(path)

    # stitched view: the three running clusters (fat line, current rebel,
    # remaining slim; NaN once the slim set is empty), sizes alongside
    j0 = result.initial_fat[0]
    rows = []
    for ell, (r0, r1) in enumerate(result.segment_rows):
        rebel = result.rebels[ell]
        slim = sorted(set(range(args.n)) - set(result.initial_fat) - set(result.rebels[: ell + 1]))
        n1 = len(result.initial_fat) + ell
        for r in range(r0, r1):
            state = result.trajectory.states[r]
            x3 = state[slim[0]] if slim else float("nan")
            rows.append([result.trajectory.times[r], state[j0], state[rebel], x3,
                         n1, 1, len(slim), result.trajectory.R_values[r]])
    concat_path = os.path.join(args.output_dir, "concat.csv")
    arr = np.array(rows)
    _write_cluster_csv(concat_path, arr[:, 0], arr[:, 1:4], arr[:, 4:7], arr[:, 7],
                       args.wrap)

    _write_json(os.path.join(args.output_dir, "summary.json"), {
        "n": args.n,
        "initial_fat": sorted(fat0),
        "symbols": "".join(str(s) for s in symbols),
        "segments": [
            {
                "csv": path,
                "observed_shift": seg.observed_shift,
                "predicted_shift": seg.predicted_shift,
                "stop_time": seg.stop_time,
            }
            for path, seg in zip(seg_files, result.segments)
        ],
        "boundary_residuals": result.boundary_residuals,
        "cumulative_shift": result.cumulative_shift,
        "predicted_cumulative_shift": result.predicted_shift,
        "stitched_csv": concat_path,
    })
    return 0


def cmd_swarm(args) -> int:
    spec = SwarmSpec(
        n=args.n,
        fat_source=_parse_index_set(args.fat_source, args.n),
        fat_target=_parse_index_set(args.fat_target, args.n),
        m_star=args.m_star,
        epsilon=args.epsilon,
        unilateral={"+": 1, "-": -1, None: None}[args.unilateral],
    )
    run = RunConfig(step=args.step, delta_stop=args.delta_stop, seed=args.seed,
                    record_every=args.record_every)
    result = run_swarm(spec, run.integration(), delta_stop=run.delta_stop, seed=run.seed)
    os.makedirs(args.output_dir, exist_ok=True)
    csv_path = os.path.join(args.output_dir, "swarm.csv")
    sizes = [len(spec.fat_source)] + [1] * (spec.cluster_count - 2) + [
        args.n - len(spec.fat_target)
    ]
    _write_cluster_csv(csv_path, result.trajectory.times, result.trajectory.states,
                       sizes, result.trajectory.R_values, args.wrap)
    _write_json(os.path.join(args.output_dir, "swarm.json"), {
        "n": args.n,
        "fat_source": sorted(spec.fat_source),
        "fat_target": sorted(spec.fat_target),
        "m_star": spec.m_star,
        "epsilon": spec.epsilon,
        "unilateral": args.unilateral,
        "seed": args.seed,
        "observed_shift": result.observed_shift,
        "predicted_shift": result.predicted_shift,
        "stop_time": result.stop_time,
        "details": {k: v for k, v in result.details.items()},
        "csv": csv_path,
    })
    return 0


def cmd_graph(args) -> int:
    graph = build_graph(args.n, adjacency_only=not args.full)
    text = export_dot(graph) if args.format == "dot" else export_json(graph)
    if args.output == "-":
        sys.stdout.write(text)
    else:
        with open(args.output, "w") as fh:
            fh.write(text)
    if args.verbose:
        print(f"vertices: {vertex_count(args.n)}, edges: {len(graph.edges)}",
              file=sys.stderr)
    return 0


def _add_run_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--step", type=float, default=1e-2, help="RK4 step size")
    p.add_argument("--delta-stop", type=float, default=1e-2,
                   help="backward-run stop tolerance")
    p.add_argument("--eps-mag", type=float, default=1e-2,
                   help="seed perturbation magnitude")
    p.add_argument("--record-every", type=int, default=1,
                   help="record every k-th step")
    p.add_argument("--wrap", action="store_true",
                   help="wrap output angles to (-pi, pi]")
    p.add_argument("--output-dir", default=".", help="directory for output files")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kuramoto-rebellions",
        description="Equilibria, heteroclinic rebellions, and connection graphs "
                    "of the equal-frequency Kuramoto model.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("simulate", help="integrate a full state forward")
    p.add_argument("--initial", required=True,
                   help="comma separated angles, or a file of angles")
    p.add_argument("--T", type=float, required=True, help="integration time")
    p.add_argument("--step", type=float, default=1e-2)
    p.add_argument("--record-every", type=int, default=1)
    p.add_argument("--wrap", action="store_true")
    p.add_argument("--output", default="trajectory.csv")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("equilibrium", help="construct and report an equilibrium")
    p.add_argument("--n", type=int, default=0, help="number of oscillators")
    p.add_argument("--fat-set", default=None,
                   help="0-based fat set indices, or a count k meaning 0..k-1; "
                        "omit for synchrony")
    p.add_argument("--linkage", default=None,
                   help="three fractions for a 3-bar linkage instead")
    p.add_argument("--verify", action="store_true",
                   help="cross-check the spectrum by finite differences")
    p.add_argument("--output", default="-")
    p.set_defaults(func=cmd_equilibrium)

    p = sub.add_parser("trace", help="trace one 3-cluster rebellion")
    p.add_argument("--alpha", required=True,
                   help="three cluster sizes or fractions, e.g. 3,1,1")
    p.add_argument("--symbol", required=True, choices=["+", "-"])
    _add_run_flags(p)
    p.set_defaults(func=cmd_trace)

    p = sub.add_parser("concat", help="concatenate one-man rebellions over a word")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--fat-set", required=True,
                   help="initial fat set (indices or a count)")
    p.add_argument("--symbols", required=True, help="word such as +-+--+-+++")
    _add_run_flags(p)
    p.set_defaults(func=cmd_concat)

    p = sub.add_parser("swarm", help="run a multi-cluster swarm rebellion")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--fat-source", required=True)
    p.add_argument("--fat-target", required=True)
    p.add_argument("--m-star", type=int, required=True)
    p.add_argument("--epsilon", type=float, default=1e-2)
    p.add_argument("--unilateral", choices=["+", "-"], default=None)
    p.add_argument("--seed", type=int, default=None)
    _add_run_flags(p)
    p.set_defaults(func=cmd_swarm)

    p = sub.add_parser("graph", help="export the connection graph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--full", action="store_true",
                   help="all inclusion edges, not only adjacent sizes")
    p.add_argument("--format", choices=["dot", "json"], default="dot")
    p.add_argument("--output", default="-")
    p.add_argument("--verbose", action="store_true")
    p.set_defaults(func=cmd_graph)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except DivergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DIVERGENCE
    except NoLinkageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NO_LINKAGE
    except NonConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NON_CONVERGENCE
    except WrongBasinError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_WRONG_BASIN
    except OrderingViolationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ORDERING
    except (KuramotoError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
