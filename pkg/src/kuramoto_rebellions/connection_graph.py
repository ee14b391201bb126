"""Connection graph: the inclusion lattice of fat index sets.

Vertices are the hyperbolic equilibria with positive order parameter --
one per fat majority set J (N/2 < |J| < N) plus synchrony (J = full
set) -- together with an artificial top vertex standing for the R = 0
equilibrium variety.  A heteroclinic orbit from fat set J to fat set J'
exists iff J is a strict subset of J', so edges are oriented toward the
larger set; by transitivity it suffices to store edges between adjacent
sizes |J'| = |J| + 1.  For even N the balanced half-size sets are not
hyperbolic (R = 0) and are absorbed into the top vertex.

Exports follow the slim-complement labeling convention: each fat vertex
is displayed as its slim set J^c, synchrony as the empty set, and the
top vertex as 0.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Iterable, Optional

from .errors import InvalidVertexError

TOP = "top"
FAT = "fat"
SYNC = "sync"


@dataclass(frozen=True)
class GraphVertex:
    """A graph vertex: the top vertex, a fat-set equilibrium, or synchrony.

    ``level`` is the Morse index N - |J| (0 for synchrony, None for the
    top vertex); ``R`` the order parameter 2|J|/N - 1 (1 for synchrony,
    0 for the top vertex).
    """

    kind: str
    fat_set: Optional[frozenset[int]]
    level: Optional[int]
    R: float

    @property
    def key(self) -> str:
        if self.kind == TOP:
            return "top"
        if self.kind == SYNC:
            return "sync"
        return "J" + "-".join(str(j) for j in sorted(self.fat_set))

    def slim_label(self, n: int) -> str:
        """Display label: the complementary slim set, per the export convention."""
        if self.kind == TOP:
            return "0"
        if self.kind == SYNC:
            return "{}"
        slim = sorted(set(range(n)) - self.fat_set)
        return "{" + ",".join(str(j) for j in slim) + "}"


@dataclass
class ConnectionGraph:
    n: int
    adjacency_only: bool
    vertices: dict[str, GraphVertex] = field(default_factory=dict)
    edges: set[tuple[str, str]] = field(default_factory=set)

    def sorted_vertices(self) -> list[GraphVertex]:
        """Vertices ordered top first, then by descending Morse level and
        ascending fat set; deterministic for stable exports."""
        def sort_key(v: GraphVertex):
            level = self.n + 1 if v.level is None else v.level
            fat = tuple(sorted(v.fat_set)) if v.fat_set else ()
            return (-level, fat)

        return sorted(self.vertices.values(), key=sort_key)

    def sorted_edges(self) -> list[tuple[str, str]]:
        index = {v.key: i for i, v in enumerate(self.sorted_vertices())}
        return sorted(self.edges, key=lambda e: (index[e[0]], index[e[1]]))


def vertex_count(n: int) -> int:
    """Number of lattice vertices: 1 (top) + #{J : |J| > N/2}, which is
    2^(N-1) + 1 for odd N and 2^(N-1) + 1 - C(N, N/2)/2 for even N."""
    if n < 2:
        raise ValueError("need at least 2 oscillators")
    return 1 + sum(comb(n, n1) for n1 in range(n // 2 + 1, n + 1))


def build_graph(n: int, adjacency_only: bool = True) -> ConnectionGraph:
    """Build the connection graph for N oscillators.

    Adjacency mode keeps only edges between fat sets of adjacent sizes
    (plus the top vertex feeding every minimal fat set); full mode adds
    an edge for every strict inclusion J < J'.
    """
    if n < 2:
        raise ValueError("need at least 2 oscillators")
    graph = ConnectionGraph(n=n, adjacency_only=adjacency_only)

    top = GraphVertex(kind=TOP, fat_set=None, level=None, R=0.0)
    sync = GraphVertex(kind=SYNC, fat_set=frozenset(range(n)), level=0, R=1.0)
    graph.vertices[top.key] = top
    by_size: dict[int, list[GraphVertex]] = {n: [sync]}
    min_fat = n // 2 + 1
    for size in range(min_fat, n):
        level_vertices = []
        for J in combinations(range(n), size):
            v = GraphVertex(
                kind=FAT, fat_set=frozenset(J), level=n - size, R=2.0 * size / n - 1.0
            )
            graph.vertices[v.key] = v
            level_vertices.append(v)
        by_size[size] = level_vertices
    graph.vertices[sync.key] = sync

    for v in by_size.get(min_fat, [sync] if min_fat == n else []):
        graph.edges.add((top.key, v.key))
    for size in range(min_fat, n):
        for u in by_size[size]:
            for w in by_size[size + 1]:
                if u.fat_set < w.fat_set:
                    graph.edges.add((u.key, w.key))
    if not adjacency_only:
        sizes = sorted(by_size)
        for i, size in enumerate(sizes):
            for larger in sizes[i + 1:]:
                for u in by_size[size]:
                    for w in by_size[larger]:
                        if u.fat_set < w.fat_set:
                            graph.edges.add((u.key, w.key))
    return graph


def reachable(fat_from: Iterable[int], fat_to: Iterable[int], n: int) -> bool:
    """Whether a heteroclinic connection exists from the equilibrium with
    fat set ``fat_from`` to the one with ``fat_to``: true iff strict
    inclusion holds.  Both sets must be fat (|J| > N/2) or the full set;
    there are no homoclinic connections, so J -> J is false."""
    a = frozenset(int(j) for j in fat_from)
    b = frozenset(int(j) for j in fat_to)
    for name, s in (("source", a), ("target", b)):
        if not s or min(s) < 0 or max(s) >= n:
            raise InvalidVertexError(f"{name} set must be a nonempty subset of range({n})")
        if 2 * len(s) <= n:
            raise InvalidVertexError(
                f"{name} set of size {len(s)} is not a fat majority of N = {n}"
            )
    return a < b


def export_dot(graph: ConnectionGraph) -> str:
    """Graphviz digraph, vertices labeled by slim complements and ranked
    by Morse level; byte-stable for a fixed graph."""
    lines = [
        "digraph connection_graph {",
        "  rankdir=TB;",
        '  node [shape=ellipse fontname="Helvetica"];',
    ]
    by_level: dict[object, list[GraphVertex]] = {}
    for v in graph.sorted_vertices():
        by_level.setdefault(v.level, []).append(v)
    for v in graph.sorted_vertices():
        lines.append(f'  "{v.key}" [label="{v.slim_label(graph.n)}"];')
    levels = sorted(by_level, key=lambda lv: -(graph.n + 1 if lv is None else lv))
    for level in levels:
        members = " ".join(f'"{v.key}";' for v in by_level[level])
        lines.append(f"  {{ rank=same; {members} }}")
    for u, w in graph.sorted_edges():
        lines.append(f'  "{u}" -> "{w}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_json(graph: ConnectionGraph) -> str:
    """JSON document with the documented schema:

    ``{"n", "adjacency_only", "vertices": [{"id", "kind", "fat_set",
    "level", "R"}...], "edges": [[from_id, to_id]...]}``;
    ``fat_set`` and ``level`` are null for the top vertex.  Output is
    byte-stable (sorted vertices, edges, and keys).
    """
    doc = {
        "n": graph.n,
        "adjacency_only": graph.adjacency_only,
        "vertices": [
            {
                "id": v.key,
                "kind": v.kind,
                "fat_set": sorted(v.fat_set) if v.fat_set is not None else None,
                "level": v.level,
                "R": v.R,
            }
            for v in graph.sorted_vertices()
        ],
        "edges": [list(e) for e in graph.sorted_edges()],
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def graph_from_json(text: str) -> ConnectionGraph:
    """Rebuild a :class:`ConnectionGraph` from its JSON export."""
    doc = json.loads(text)
    graph = ConnectionGraph(n=int(doc["n"]), adjacency_only=bool(doc["adjacency_only"]))
    for item in doc["vertices"]:
        v = GraphVertex(
            kind=item["kind"],
            fat_set=frozenset(item["fat_set"]) if item["fat_set"] is not None else None,
            level=item["level"],
            R=float(item["R"]),
        )
        graph.vertices[v.key] = v
    graph.edges = {(u, w) for u, w in doc["edges"]}
    return graph
