#!/usr/bin/env python3
"""The connection graph as a subset lattice.

Which partially synchronized states can decay into which?  Exactly
those whose fat majority sets nest: J leads to J' iff J is a strict
subset of J'.  The resulting directed graph is the inclusion lattice of
majority subsets with an artificial top vertex for the R = 0 variety.
This script prints vertex counts, verifies a reachability query against
the lattice, and writes the 5-oscillator graph as DOT and JSON.
"""

import os

from kuramoto_rebellions import build_graph, export_dot, export_json, reachable, vertex_count

OUT = os.path.join(os.path.dirname(__file__), "output")
os.makedirs(OUT, exist_ok=True)

print(f"{'N':>3s} {'vertices':>9s} {'adjacency edges':>16s}")
for n in range(2, 11):
    graph = build_graph(n)
    print(f"{n:3d} {vertex_count(n):9d} {len(graph.edges):16d}")

print("\nreachability in the N = 5 lattice:")
for src, dst in [({0, 1, 2}, {0, 1, 2, 3}), ({0, 1, 2}, {0, 1, 3, 4}),
                 ({0, 1, 2}, {0, 1, 2, 3, 4})]:
    print(f"  {sorted(src)} -> {sorted(dst)} : {reachable(src, dst, n=5)}")

graph5 = build_graph(5)
dot_path = os.path.join(OUT, "connection_graph_5.dot")
json_path = os.path.join(OUT, "connection_graph_5.json")
with open(dot_path, "w") as fh:
    fh.write(export_dot(graph5))
with open(json_path, "w") as fh:
    fh.write(export_json(graph5))
print(f"\nwrote {dot_path} (render with: dot -Tpng {dot_path} -o graph.png)")
print(f"wrote {json_path}")
