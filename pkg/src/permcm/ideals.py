"""Squarefree monomial ideals: cover ideals, linear quotients, splittings.

A squarefree monomial is a variable subset, stored as a bitmask (bit i-1
for x_i), and an ideal is its antichain of minimal generators.  The two
searches here are exact and capped by generator count:

* linear quotients: an ordering u_1..u_m such that each colon ideal
  (u_1,...,u_{k-1}) : u_k is generated by variables.  For squarefree
  monomials (u_i) : u_k is the monomial on u_i minus u_k, so the step
  condition is purely set arithmetic.
* vertex splittable: I = (0), (u) or S, or I = x_i I_1 + I_2 for some
  pivot variable with I_2 contained in I_1 and both parts recursively
  splittable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .caps import check_cap
from .graphs import Graph, mask_of, vertices_of
from .invariants import independence_invariants


def _minimalize(masks: Iterable[int]) -> tuple[int, ...]:
    """Antichain of divisibility-minimal squarefree monomials."""
    pool = sorted(set(masks), key=lambda m: (m.bit_count(), m))
    keep: list[int] = []
    for m in pool:
        if not any(k & m == k for k in keep):
            keep.append(m)
    return tuple(sorted(keep))


@dataclass(frozen=True)
class MonomialIdeal:
    """n ambient variables; gens a sorted antichain of minimal generators.

    ``gens == ()`` is the zero ideal, ``gens == (0,)`` the unit ideal.
    """

    n: int
    gens: tuple[int, ...]

    @staticmethod
    def from_supports(n: int, supports: Iterable[Iterable[int]]) -> "MonomialIdeal":
        masks = []
        for s in supports:
            m = mask_of(s)
            if m & ~((1 << n) - 1):
                raise ValueError("generator uses a variable beyond the ambient count")
            masks.append(m)
        return MonomialIdeal(n, _minimalize(masks))

    def generator_sets(self) -> tuple[tuple[int, ...], ...]:
        return tuple(sorted(vertices_of(m) for m in self.gens))

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return self.gens == (0,)


def cover_ideal(g: Graph) -> MonomialIdeal:
    """Generators are the minimal vertex covers of the graph."""
    _, _, _, covers = independence_invariants(g)
    return MonomialIdeal(g.n, _minimalize(mask_of(c) for c in covers))


def _linear_step_ok(placed: Sequence[int], new: int) -> bool:
    # Colon of the prefix ideal by ``new``: generated by the differences
    # p \ new.  It is generated by variables iff every difference
    # contains a single-variable difference.
    singles = 0
    diffs = []
    for p in placed:
        d = p & ~new
        if d.bit_count() == 1:
            singles |= d
        diffs.append(d)
    return all(d & singles for d in diffs)


def is_linear_quotients_order(ideal: MonomialIdeal, order: Sequence[Sequence[int] | int]) -> bool:
    """Check a proposed generator ordering for the colon condition."""
    masks = [m if isinstance(m, int) else mask_of(m) for m in order]
    if sorted(masks) != sorted(ideal.gens):
        raise ValueError("order is not a permutation of the generators")
    for k in range(1, len(masks)):
        if not _linear_step_ok(masks[:k], masks[k]):
            return False
    return True


def linear_quotients_order(ideal: MonomialIdeal) -> tuple[tuple[int, ...], ...] | None:
    """An ordering with linear quotients, or None.

    Greedy extension with backtracking; failed prefix sets are memoised
    (the feasibility of a prefix only depends on the set it covers).
    """
    check_cap("linear_quotients", len(ideal.gens), "generator count")
    gens = list(ideal.gens)
    if len(gens) <= 1:
        return tuple(vertices_of(m) for m in gens)
    dead: set[frozenset[int]] = set()
    order: list[int] = []

    def extend(remaining: list[int]) -> bool:
        if not remaining:
            return True
        state = frozenset(order)
        if state in dead:
            return False
        for idx, cand in enumerate(remaining):
            if _linear_step_ok(order, cand):
                order.append(cand)
                if extend(remaining[:idx] + remaining[idx + 1:]):
                    return True
                order.pop()
        dead.add(state)
        return False

    for idx, first in enumerate(gens):
        order.append(first)
        if extend(gens[:idx] + gens[idx + 1:]):
            return tuple(vertices_of(m) for m in order)
        order.pop()
    return None


_SPLIT_CACHE: dict[tuple[int, ...], bool] = {}


def _ideal_canonical(gens: Sequence[int]) -> tuple[int, ...]:
    """Sort generators, then relabel variables by first occurrence."""
    ordered = sorted(gens)
    remap: dict[int, int] = {}
    nb = 0
    for g in ordered:
        x = g
        while x:
            low = x & -x
            if low not in remap:
                remap[low] = 1 << nb
                nb += 1
            x ^= low
    out = []
    for g in ordered:
        h = 0
        x = g
        while x:
            low = x & -x
            h |= remap[low]
            x ^= low
        out.append(h)
    return tuple(sorted(out))


def _split_key(gens: tuple[int, ...]) -> bool:
    cached = _SPLIT_CACHE.get(gens)
    if cached is not None:
        return cached
    result = _split_search(gens) is not None
    _SPLIT_CACHE[gens] = result
    return result


def _pivot_candidates(gens: Sequence[int]) -> list[int]:
    counts: dict[int, int] = {}
    for g in gens:
        x = g
        while x:
            low = x & -x
            counts[low] = counts.get(low, 0) + 1
            x ^= low
    # fail fast: most frequent variable first, smallest index on ties
    return sorted(counts, key=lambda b: (-counts[b], b))


def _split_search(gens: tuple[int, ...]) -> int | None:
    """Return a workable pivot bit, or None.  Assumes gens minimalized."""
    if len(gens) <= 1:
        return 0  # base case: (0), (u) or S
    for xb in _pivot_candidates(gens):
        with_x = tuple(g & ~xb for g in gens if g & xb)
        without = tuple(g for g in gens if not g & xb)
        if not with_x:
            continue
        # I_2 contained in I_1: every generator without the pivot must be
        # divisible by a generator of the pivot part
        if not all(any(w & v == w for w in with_x) for v in without):
            continue
        if _split_key(_ideal_canonical(with_x)) and _split_key(_ideal_canonical(without)):
            return xb
    return None


def vertex_splittable_test(ideal: MonomialIdeal) -> dict | None:
    """Witness tree for the recursive splitting, or None.

    Base cases are the zero ideal, a principal ideal and the unit ideal.
    The recursion splits the generators as x_i G(I_1) plus G(I_2) and
    requires I_2 inside I_1 with both parts splittable.
    """
    check_cap("vertex_splittable", len(ideal.gens), "generator count")

    def build(gens: tuple[int, ...]) -> dict | None:
        if len(gens) <= 1:
            return {"base": [list(vertices_of(g)) for g in gens]}
        if not _split_key(_ideal_canonical(gens)):
            return None
        xb = _split_search(gens)
        assert xb, "memo and search disagree"
        with_x = tuple(sorted(g & ~xb for g in gens if g & xb))
        without = tuple(g for g in gens if not g & xb)
        left = build(with_x)
        right = build(without)
        assert left is not None and right is not None
        return {
            "pivot": xb.bit_length(),
            "factor": left,
            "rest": right,
        }

    return build(ideal.gens)


# -- powers experiment hook ----------------------------------------------------
#
# General (non-squarefree) monomials appear only here, as exponent
# tuples.  The CLI exposes this as a data-gathering command for the
# behaviour of powers of cover ideals; nothing in the package asserts
# anything about the outcome.

def _power_gens(ideal: MonomialIdeal, k: int) -> list[tuple[int, ...]]:
    if k < 1:
        raise ValueError("power must be at least 1")
    exps: set[tuple[int, ...]] = set()

    def rec(start: int, left: int, acc: list[int]) -> None:
        if left == 0:
            exps.add(tuple(acc))
            return
        for idx in range(start, len(ideal.gens)):
            g = ideal.gens[idx]
            nxt = list(acc)
            for v in vertices_of(g):
                nxt[v - 1] += 1
            rec(idx, left - 1, nxt)

    rec(0, k, [0] * ideal.n)
    gens = sorted(exps)
    minimal = []
    for e in gens:
        if not any(all(f[i] <= e[i] for i in range(len(e))) for f in minimal if f != e):
            minimal.append(e)
    return minimal


def power_has_linear_quotients(ideal: MonomialIdeal, k: int) -> tuple[bool, int]:
    """Search a linear-quotients order for the k-th power.

    Returns (found, generator count).  Exponent-tuple analogue of the
    squarefree search: the colon by the new generator is computed with
    componentwise differences.
    """
    gens = _power_gens(ideal, k)
    check_cap("linear_quotients", len(gens), "generator count")

    def diff(p: tuple[int, ...], u: tuple[int, ...]) -> tuple[int, ...]:
        return tuple(max(a - b, 0) for a, b in zip(p, u))

    def step_ok(placed: list[tuple[int, ...]], new: tuple[int, ...]) -> bool:
        diffs = [diff(p, new) for p in placed]
        singles = [d for d in diffs if sum(d) == 1]
        return all(
            any(all(s[i] <= dd[i] for i in range(len(dd))) for s in singles)
            for dd in diffs
        )

    if len(gens) <= 1:
        return True, len(gens)
    order: list[tuple[int, ...]] = []

    def extend(remaining: list[tuple[int, ...]]) -> bool:
        if not remaining:
            return True
        for idx, cand in enumerate(remaining):
            if step_ok(order, cand):
                order.append(cand)
                if extend(remaining[:idx] + remaining[idx + 1:]):
                    return True
                order.pop()
        return False

    for idx, first in enumerate(gens):
        order.append(first)
        if extend(gens[:idx] + gens[idx + 1:]):
            return True, len(gens)
        order.pop()
    return False, len(gens)
