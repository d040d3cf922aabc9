#!/usr/bin/env python3
"""End-to-end classification of a gallery of graphs.

The report carries both the theorem-driven flags and the independent
oracle block, so a reader can see them agree.
"""

import json

from permcm import (
    Permutation,
    classify,
    complete_graph,
    cycle_graph,
    disjoint_edges,
    graph_from_edges,
    graph_from_permutation,
    path_graph,
)

GALLERY = [
    ("G((2,4,5,1,3))", graph_from_permutation(Permutation((2, 4, 5, 1, 3)))),
    ("P_4", path_graph(4)),
    ("2K_2", disjoint_edges(2)),
    ("K_5", complete_graph(5)),
    # an unmixed permutation graph that is NOT Cohen-Macaulay: the
    # 5-cycle with two chords, whose vertex set splits into maximal
    # cliques in two different ways
    ("chorded C_5", graph_from_edges(5, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5), (2, 5), (1, 4)])),
    ("C_5 (not a permutation graph)", cycle_graph(5)),
]

for name, g in GALLERY:
    r = classify(g)
    flags = {
        "perm": r.is_permutation,
        "unmixed": r.unmixed,
        "cm": r.cm,
        "vd": r.vertex_decomposable,
        "gor": r.gorenstein,
        "nearly": r.nearly_gorenstein,
        "bicm": r.bicm,
        "hilb": r.hilbertian,
        "a": r.a_invariant,
        "reg": r.reg,
    }
    print(f"{name:32s} {flags}")

# The non-CM witness: two distinct partitions into maximal cliques.
r = classify(GALLERY[4][1])
print("\nchorded C_5 clique partitions (two of them, so not CM):")
print(json.dumps(r.witnesses["clique_partitions"]))

# A full report is plain JSON.
print("\nfull report for 2K_2:")
print(json.dumps(classify(disjoint_edges(2)).to_dict(), indent=2, sort_keys=True)[:400], "...")
