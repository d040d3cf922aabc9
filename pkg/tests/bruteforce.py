"""Independent brute-force oracles used only by the tests.

Everything here enumerates subsets directly and never calls the package
search routines it is checking, so a test comparing the two routes is a
genuine cross-validation.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations

from permcm import Graph, graph_from_edges
from permcm.graphs import vbit


def all_graphs(n: int):
    """Every labelled graph on n vertices (2^C(n,2) of them)."""
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    for bits in range(1 << len(pairs)):
        edges = [p for k, p in enumerate(pairs) if bits >> k & 1]
        yield graph_from_edges(n, edges)


def _is_independent(g: Graph, subset: tuple[int, ...]) -> bool:
    return all(not g.has_edge(u, v) for u, v in combinations(subset, 2))


def brute_maximal_independent_sets(g: Graph) -> set[tuple[int, ...]]:
    verts = g.vertices()
    independents = [
        s for r in range(g.n + 1) for s in combinations(verts, r) if _is_independent(g, s)
    ]
    ind_sets = {frozenset(s) for s in independents}
    out = set()
    for s in ind_sets:
        if not any(s < t for t in ind_sets):
            out.add(tuple(sorted(s)))
    return out


def brute_maximal_cliques(g: Graph) -> set[tuple[int, ...]]:
    verts = g.vertices()
    cliques = {
        frozenset(s)
        for r in range(1, g.n + 1)
        for s in combinations(verts, r)
        if all(g.has_edge(u, v) for u, v in combinations(s, 2))
    }
    if g.n == 0:
        return set()
    out = set()
    for s in cliques:
        if not any(s < t for t in cliques):
            out.add(tuple(sorted(s)))
    return out


def brute_minimal_vertex_covers(g: Graph) -> set[tuple[int, ...]]:
    verts = g.vertices()
    edges = g.edges()

    def is_cover(s: frozenset[int]) -> bool:
        return all(u in s or v in s for u, v in edges)

    covers = {
        frozenset(s)
        for r in range(g.n + 1)
        for s in combinations(verts, r)
        if is_cover(frozenset(s))
    }
    out = set()
    for s in covers:
        if not any(t < s for t in covers):
            out.add(tuple(sorted(s)))
    return out


def brute_matching_number(g: Graph) -> int:
    edges = g.edges()
    best = 0
    for r in range(len(edges), 0, -1):
        if r <= best:
            break
        for sub in combinations(edges, r):
            used = set()
            ok = True
            for u, v in sub:
                if u in used or v in used:
                    ok = False
                    break
                used.update((u, v))
            if ok:
                best = max(best, r)
                break
    return best


def brute_induced_matching_number(g: Graph) -> int:
    edges = g.edges()

    def forms_gap(e, f) -> bool:
        eu, ev = e
        return not (g.adj[eu] | g.adj[ev] | vbit(eu) | vbit(ev)) & (vbit(f[0]) | vbit(f[1]))

    best = 0
    for r in range(len(edges), 0, -1):
        if r <= best:
            break
        for sub in combinations(edges, r):
            if all(forms_gap(e, f) for e, f in combinations(sub, 2)):
                best = r
                break
    return best


def brute_is_chordal(g: Graph) -> bool:
    """No induced cycle of length at least 4."""
    verts = g.vertices()
    for r in range(4, g.n + 1):
        for sub in combinations(verts, r):
            degs = [sum(1 for u in sub if u != v and g.has_edge(u, v)) for v in sub]
            if any(d != 2 for d in degs):
                continue
            edge_count = sum(degs) // 2
            if edge_count != r:
                continue
            # 2-regular with r edges on r vertices: one or more disjoint
            # cycles; connected means a single induced r-cycle
            seen = {sub[0]}
            frontier = [sub[0]]
            while frontier:
                v = frontier.pop()
                for u in sub:
                    if u not in seen and g.has_edge(u, v):
                        seen.add(u)
                        frontier.append(u)
            if len(seen) == r:
                return False
    return True


def brute_has_cohesive_order(g: Graph) -> bool:
    from permcm import verify_cohesive_order

    return any(
        verify_cohesive_order(g, perm) for perm in permutations(range(1, g.n + 1))
    )


def fraction_rank(rows) -> int:
    """Plain Gaussian elimination over Fraction."""
    if not rows:
        return 0
    m = [[Fraction(x) for x in r] for r in rows]
    nr, nc = len(m), len(m[0])
    rank = 0
    for c in range(nc):
        piv = next((i for i in range(rank, nr) if m[i][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = 1 / m[rank][c]
        m[rank] = [x * inv for x in m[rank]]
        for i in range(nr):
            if i != rank and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
        if rank == nr:
            break
    return rank


def hilbert_function_from_f(f: tuple[int, ...], m: int) -> int:
    """Direct count of degree-m monomials supported on faces."""
    from math import comb

    if m == 0:
        return 1
    return sum(f[k + 1] * comb(m - 1, k) for k in range(len(f) - 1))


def check_vd_tree(facets: set[tuple[int, ...]], tree: dict) -> bool:
    """Re-validate a shedding witness tree from the facet sets alone."""
    if "simplex" in tree:
        recorded = {tuple(sorted(f)) for f in tree["simplex"]}
        return len(facets) <= 1 and recorded == facets
    v = tree["shedding_vertex"]
    if not any(v in f for f in facets):
        return False
    del_pool = {tuple(sorted(set(f) - {v})) for f in facets}
    del_facets = {
        f for f in del_pool if not any(set(f) < set(h) for h in del_pool)
    }
    if not del_facets <= facets:
        return False
    link = {tuple(sorted(set(f) - {v})) for f in facets if v in f}
    return check_vd_tree(del_facets, tree["deletion"]) and check_vd_tree(
        link, tree["link"]
    )


def check_split_tree(gens: set[tuple[int, ...]], tree: dict) -> bool:
    """Re-validate a vertex-splitting witness from the generators alone."""
    if "base" in tree:
        recorded = {tuple(sorted(u)) for u in tree["base"]}
        return len(gens) <= 1 and recorded == gens
    x = tree["pivot"]
    with_x = {tuple(sorted(set(u) - {x})) for u in gens if x in u}
    without = {u for u in gens if x not in u}
    if not with_x:
        return False
    if not all(any(set(w) <= set(v) for w in with_x) for v in without):
        return False
    return check_split_tree(with_x, tree["factor"]) and check_split_tree(
        without, tree["rest"]
    )
