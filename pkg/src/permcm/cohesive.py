"""Cohesive orders, comparability posets, and maximal-clique partitions.

A labelling 1..n of the vertices is *cohesive* when

  (i)  i < j < k, {i,j} and {j,k} edges  =>  {i,k} is an edge, and
  (ii) i < j < k, {i,k} an edge          =>  {i,j} or {j,k} is an edge.

A graph admits a cohesive order exactly when it is a permutation graph
(the inversion graph of some permutation), and the inversion labelling
itself is always cohesive.  Recognition here is a backtracking search
over labellings with prefix pruning; at desk scale that beats carrying a
full transitive-orientation recogniser.

Under a cohesive order, "earlier and adjacent" is a partial order whose
maximal chains are precisely the maximal cliques of the graph.  The
Cohen-Macaulay classifier needs the partitions of the vertex set into r
disjoint maximal cliques; those are enumerated by an exact-cover search
with deterministic fewest-candidates column selection.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graphs import Graph, vbit, vertices_of


@dataclass(frozen=True)
class CohesiveOrder:
    """``order[k]`` is the vertex placed at position k+1."""

    order: tuple[int, ...]

    def positions(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.order)}


def _as_order(order: CohesiveOrder | Sequence[int]) -> tuple[int, ...]:
    if isinstance(order, CohesiveOrder):
        return order.order
    return tuple(order)


def verify_cohesive_order(g: Graph, order: CohesiveOrder | Sequence[int]) -> bool:
    """Check both cohesive axioms under the given labelling, O(n^3)."""
    seq = _as_order(order)
    if sorted(seq) != list(range(1, g.n + 1)):
        raise ValueError("order must be a permutation of the vertices")
    n = g.n
    for c in range(n):
        vc = seq[c]
        for b in range(c):
            vb = seq[b]
            e_bc = g.has_edge(vb, vc)
            for a in range(b):
                va = seq[a]
                e_ab = g.has_edge(va, vb)
                e_ac = g.has_edge(va, vc)
                if e_ab and e_bc and not e_ac:
                    return False
                if e_ac and not (e_ab or e_bc):
                    return False
    return True


def find_cohesive_order(g: Graph) -> CohesiveOrder | None:
    """Search for a cohesive order; None means g is not a permutation graph.

    Vertices are placed left to right, trying smaller labels first, and a
    prefix is abandoned as soon as a triple ending at the new vertex
    violates an axiom.  The witness returned is the lexicographically
    first valid order.
    """
    n = g.n
    if n == 0:
        return CohesiveOrder(())
    seq: list[int] = []
    placed = 0

    def fits(v: int) -> bool:
        k = len(seq)
        for b in range(k):
            vb = seq[b]
            e_bv = g.has_edge(vb, v)
            for a in range(b):
                va = seq[a]
                e_ab = g.has_edge(va, vb)
                e_av = g.has_edge(va, v)
                if e_ab and e_bv and not e_av:
                    return False
                if e_av and not (e_ab or e_bv):
                    return False
        return True

    def extend() -> bool:
        nonlocal placed
        if len(seq) == n:
            return True
        for v in range(1, n + 1):
            if placed & vbit(v):
                continue
            if fits(v):
                seq.append(v)
                placed |= vbit(v)
                if extend():
                    return True
                seq.pop()
                placed &= ~vbit(v)
        return False

    return CohesiveOrder(tuple(seq)) if extend() else None


@dataclass(frozen=True)
class Poset:
    """Strict order on 1..n given by up-set and down-set bitmasks."""

    n: int
    up: tuple[int, ...]      # up[v] = mask of elements strictly above v
    down: tuple[int, ...]
    covers_up: tuple[int, ...]  # covers_up[v] = mask of w with v covered by w

    def ground(self) -> tuple[int, ...]:
        return tuple(range(1, self.n + 1))

    def less(self, u: int, v: int) -> bool:
        return bool(self.up[u] & vbit(v))

    def covers(self, u: int, v: int) -> bool:
        """True when v covers u (u below v with nothing in between)."""
        return bool(self.covers_up[u] & vbit(v))

    def maximal_elements(self) -> tuple[int, ...]:
        return tuple(v for v in range(1, self.n + 1) if not self.up[v])

    def minimal_elements(self) -> tuple[int, ...]:
        return tuple(v for v in range(1, self.n + 1) if not self.down[v])


def comparability_poset(g: Graph, order: CohesiveOrder | Sequence[int]) -> Poset:
    """Order v below w when v precedes w in the cohesive order and they
    are adjacent.  Axiom (i) is exactly transitivity of this relation."""
    seq = _as_order(order)
    if not verify_cohesive_order(g, seq):
        raise ValueError("order is not cohesive for this graph")
    n = g.n
    up = [0] * (n + 1)
    down = [0] * (n + 1)
    later = 0
    for v in reversed(seq):
        up[v] = g.adj[v] & later
        later |= vbit(v)
    earlier = 0
    for v in seq:
        down[v] = g.adj[v] & earlier
        earlier |= vbit(v)
    covers = [0] * (n + 1)
    for v in range(1, n + 1):
        for w in vertices_of(up[v]):
            if not up[v] & down[w]:
                covers[v] |= vbit(w)
    return Poset(n, tuple(up), tuple(down), tuple(covers))


def maximal_chains(p: Poset) -> tuple[tuple[int, ...], ...]:
    """All maximal chains, each listed bottom to top."""
    out: list[tuple[int, ...]] = []

    def walk(chain: list[int], v: int) -> None:
        chain.append(v)
        if not p.up[v]:
            out.append(tuple(chain))
        else:
            for w in vertices_of(p.covers_up[v]):
                walk(chain, w)
        chain.pop()

    for v in p.minimal_elements():
        walk([], v)
    return tuple(sorted(out))


def maximal_cliques(g: Graph) -> tuple[tuple[int, ...], ...]:
    """All inclusion-maximal cliques (Bron-Kerbosch with pivoting)."""
    if g.n == 0:
        return ()
    found: list[int] = []
    adj = g.adj

    def bk(r: int, p: int, x: int) -> None:
        if not p and not x:
            found.append(r)
            return
        # pivot with most neighbours inside P, smallest label on ties
        best_u, best = 0, -1
        cand = p | x
        while cand:
            low = cand & -cand
            u = low.bit_length()
            cnt = (p & adj[u]).bit_count()
            if cnt > best:
                best_u, best = u, cnt
            cand ^= low
        ext = p & ~adj[best_u]
        while ext:
            low = ext & -ext
            v = low.bit_length()
            bk(r | low, p & adj[v], x & adj[v])
            p &= ~low
            x |= low
            ext ^= low

    bk(0, g.full_mask, 0)
    return tuple(sorted(vertices_of(m) for m in found))


@dataclass(frozen=True)
class ChainPartition:
    """A partition of the vertex set into disjoint maximal cliques.

    When built against a poset, each block also records its top element
    (the poset-maximum of the chain) and the unique element the top
    covers inside the block (None for singleton blocks).
    """

    blocks: tuple[tuple[int, ...], ...]
    tops: tuple[int, ...] | None = None
    lower_covers: tuple[int | None, ...] | None = None


def _annotate(blocks: tuple[tuple[int, ...], ...], poset: Poset) -> ChainPartition:
    tops: list[int] = []
    lowers: list[int | None] = []
    for block in blocks:
        bmask = sum(vbit(v) for v in block)
        top = [v for v in block if not poset.up[v] & bmask]
        if len(top) != 1:
            raise ValueError(f"block {block} is not a chain of the poset")
        j = top[0]
        rest = bmask & ~vbit(j)
        if rest:
            second = [v for v in vertices_of(rest) if not poset.up[v] & rest]
            i = second[0]
            if not poset.covers(i, j):
                raise ValueError(f"{i} is not a lower cover of {j} in block {block}")
            lowers.append(i)
        else:
            lowers.append(None)
        tops.append(j)
    return ChainPartition(blocks, tuple(tops), tuple(lowers))


def maximal_clique_partitions(
    g: Graph,
    r: int,
    limit: int | None = 2,
    poset: Poset | None = None,
) -> tuple[ChainPartition, ...]:
    """Partitions of V(g) into exactly r pairwise disjoint maximal cliques.

    Exact cover over the maximal-clique list: repeatedly pick the
    uncovered vertex with the fewest usable cliques and branch on them in
    canonical order, so the enumeration order is deterministic.  At most
    ``limit`` partitions are produced (None enumerates all); the default
    of 2 is what uniqueness testing needs.
    """
    if r < 1:
        raise ValueError("r must be at least 1")
    cliques = [sum(vbit(v) for v in c) for c in maximal_cliques(g)]
    results: list[tuple[tuple[int, ...], ...]] = []

    def search(uncovered: int, chosen: list[int]) -> bool:
        # returns True when the limit has been hit
        if not uncovered:
            if len(chosen) == r:
                blocks = tuple(sorted(vertices_of(m) for m in chosen))
                results.append(blocks)
                return limit is not None and len(results) >= limit
            return False
        if len(chosen) >= r:
            return False
        col, candidates = 0, None
        probe = uncovered
        while probe:
            low = probe & -probe
            cand = [c for c in cliques if c & low and not c & ~uncovered]
            if candidates is None or len(cand) < len(candidates):
                col, candidates = low, cand
                if not cand:
                    break
            probe ^= low
        for c in candidates or ():
            chosen.append(c)
            if search(uncovered & ~c, chosen):
                return True
            chosen.pop()
        return False

    search(g.full_mask, [])
    blocks_list = sorted(set(results))
    if poset is not None:
        return tuple(_annotate(b, poset) for b in blocks_list)
    return tuple(ChainPartition(b) for b in blocks_list)
