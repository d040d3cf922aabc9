"""Simplicial complexes and the exact algebraic oracles built on them.

This module is the independent ground truth the theorem-driven
classifiers are checked against.  Everything runs over the rationals
with exact integer arithmetic:

* reduced simplicial homology ranks, via boundary matrices and
  fraction-free (Bareiss) rank computation;
* Reisner's criterion for Cohen-Macaulayness of a Stanley-Reisner ring:
  every link, the empty face included, has vanishing reduced homology
  below its own dimension;
* graded Betti numbers of the quotient by the Stanley-Reisner ideal via
  Hochster's formula, summing homology of induced subcomplexes over all
  vertex subsets, with regularity / projective dimension / depth / type
  read off the table;
* f-vectors, h-vectors, Hilbert function and polynomial, and the
  a-invariant (degree of the Hilbert series numerator minus the Krull
  dimension);
* vertex decomposability (witness tree of shedding vertices) and a
  size-capped brute-force shelling test.

Conventions: the void complex (no faces at all) and the complex {{}}
whose only face is the empty set are distinct values; the latter has
dimension -1 and reduced homology of rank 1 in dimension -1.  A complex
also carries its ambient vertex set, which may be larger than the union
of its facets; ambient-only vertices do not change homology but do
matter for Betti tables and depth.

Homology is computed by canonical form (the facet list after an
order-preserving relabelling of the used vertices) and memoised
globally, which is what makes the exhaustive sweeps cheap: independence
complexes of induced subgraphs repeat massively across a sweep.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Iterable, Iterator, Sequence

from .caps import check_cap
from .graphs import Graph, mask_of, vbit, vertices_of
from .invariants import maximal_independent_sets


def _maximalize(masks: Iterable[int]) -> tuple[int, ...]:
    """Antichain of inclusion-maximal masks."""
    pool = sorted(set(masks), key=lambda m: (-m.bit_count(), m))
    keep: list[int] = []
    for m in pool:
        if not any(m & k == m for k in keep):
            keep.append(m)
    return tuple(sorted(keep))


@dataclass(frozen=True)
class SimplicialComplex:
    """Facet representation; masks use bit v-1 for vertex v."""

    vertices: int            # ambient vertex set as a bitmask
    facets: tuple[int, ...]  # antichain, sorted ascending as integers

    @staticmethod
    def from_faces(vertices: Iterable[int] | int, faces: Iterable[Iterable[int]]) -> "SimplicialComplex":
        vmask = vertices if isinstance(vertices, int) else mask_of(vertices)
        fmasks = [mask_of(f) for f in faces]
        for m in fmasks:
            if m & ~vmask:
                raise ValueError("face outside the ambient vertex set")
        return SimplicialComplex(vmask, _maximalize(fmasks))

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def dim(self) -> int | None:
        if not self.facets:
            return None
        return max(m.bit_count() for m in self.facets) - 1

    def facet_sets(self) -> tuple[tuple[int, ...], ...]:
        return tuple(sorted(vertices_of(m) for m in self.facets))

    def support(self) -> int:
        s = 0
        for m in self.facets:
            s |= m
        return s

    def has_face(self, face: Iterable[int] | int) -> bool:
        f = face if isinstance(face, int) else mask_of(face)
        return any(f & m == f for m in self.facets)

    def faces(self) -> set[int]:
        """All faces as masks (the empty face included, unless void)."""
        out: set[int] = set()
        for fac in self.facets:
            sub = fac
            while True:
                out.add(sub)
                if sub == 0:
                    break
                sub = (sub - 1) & fac
        return out

    def link(self, face: Iterable[int] | int) -> "SimplicialComplex":
        f = face if isinstance(face, int) else mask_of(face)
        if not self.has_face(f):
            raise ValueError("link of a non-face")
        lk = tuple(sorted(m & ~f for m in self.facets if m & f == f))
        return SimplicialComplex(self.vertices & ~f, lk)

    def deletion(self, face: Iterable[int] | int) -> "SimplicialComplex":
        f = face if isinstance(face, int) else mask_of(face)
        if not self.has_face(f):
            raise ValueError("deletion of a non-face")
        return SimplicialComplex(self.vertices & ~f, _maximalize(m & ~f for m in self.facets))

    def induced(self, sub_vertices: Iterable[int] | int) -> "SimplicialComplex":
        w = sub_vertices if isinstance(sub_vertices, int) else mask_of(sub_vertices)
        if w & ~self.vertices:
            raise ValueError("induced subcomplex on non-ambient vertices")
        return SimplicialComplex(w, _maximalize(m & w for m in self.facets))

    @property
    def is_simplex(self) -> bool:
        return len(self.facets) <= 1


def complex_to_json(c: SimplicialComplex) -> dict:
    return {
        "vertices": list(vertices_of(c.vertices)),
        "facets": [list(f) for f in c.facet_sets()],
    }


def complex_from_json(data: dict) -> SimplicialComplex:
    if "vertices" not in data or "facets" not in data:
        raise ValueError('complex JSON needs "vertices" and "facets"')
    return SimplicialComplex.from_faces(data["vertices"], data["facets"])


def independence_complex(g: Graph) -> SimplicialComplex:
    """Faces are the independent sets; facets the maximal ones."""
    facets = tuple(sorted(mask_of(s) for s in maximal_independent_sets(g)))
    if g.n and not facets:  # cannot happen: singletons are independent
        raise AssertionError("graph independence complex lost its vertices")
    if g.n == 0:
        facets = (0,)
    return SimplicialComplex((1 << g.n) - 1, facets)


def link_and_deletion(
    c: SimplicialComplex, face: Iterable[int] | int
) -> tuple[SimplicialComplex, SimplicialComplex]:
    return c.link(face), c.deletion(face)


# -- canonical forms and the homology cache --------------------------------

def _canonical(facets: Sequence[int]) -> tuple[int, ...]:
    """Facets after relabelling the used vertices 1..k in sorted order."""
    supp = 0
    for m in facets:
        supp |= m
    if supp == 0:
        return tuple(sorted(facets))
    remap: dict[int, int] = {}
    nb = 0
    s = supp
    while s:
        low = s & -s
        remap[low] = 1 << nb
        nb += 1
        s ^= low
    out = []
    for m in facets:
        g = 0
        x = m
        while x:
            low = x & -x
            g |= remap[low]
            x ^= low
        out.append(g)
    return tuple(sorted(out))


def exact_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank over the rationals of an integer matrix, fraction-free.

    Bareiss elimination with column skipping: all intermediate entries
    are minors of the input, so the divisions are exact and everything
    stays an integer.
    """
    if not rows:
        return 0
    m = [list(r) for r in rows]
    nr, nc = len(m), len(m[0])
    rank = 0
    prev = 1
    for c in range(nc):
        piv = None
        for i in range(rank, nr):
            if m[i][c]:
                piv = i
                break
        if piv is None:
            continue
        if piv != rank:
            m[rank], m[piv] = m[piv], m[rank]
        p = m[rank][c]
        row_r = m[rank]
        for i in range(rank + 1, nr):
            row_i = m[i]
            mic = row_i[c]
            for j in range(c + 1, nc):
                row_i[j] = (row_i[j] * p - mic * row_r[j]) // prev
            row_i[c] = 0
        prev = p
        rank += 1
        if rank == nr:
            break
    return rank


_HOMOLOGY_CACHE: dict[tuple[int, ...], dict[int, int]] = {}


def _homology_of_key(key: tuple[int, ...]) -> dict[int, int]:
    cached = _HOMOLOGY_CACHE.get(key)
    if cached is not None:
        return cached
    if not key:
        _HOMOLOGY_CACHE[key] = {}
        return {}
    faces: set[int] = set()
    for fac in key:
        sub = fac
        while True:
            faces.add(sub)
            if sub == 0:
                break
            sub = (sub - 1) & fac
    by_size: dict[int, list[int]] = {}
    for f in faces:
        by_size.setdefault(f.bit_count(), []).append(f)
    for group in by_size.values():
        group.sort()
    max_size = max(by_size)
    index = {s: {f: i for i, f in enumerate(group)} for s, group in by_size.items()}

    # boundary_rank[s] = rank of the map from size-s chains to size-(s-1)
    boundary_rank = [0] * (max_size + 2)
    for s in range(1, max_size + 1):
        rows_faces = by_size.get(s - 1, [])
        cols_faces = by_size.get(s, [])
        if not rows_faces or not cols_faces:
            continue
        mat = [[0] * len(cols_faces) for _ in rows_faces]
        row_index = index[s - 1]
        for col, fac in enumerate(cols_faces):
            sign = 1
            x = fac
            while x:
                low = x & -x
                mat[row_index[fac ^ low]][col] = sign
                sign = -sign
                x ^= low
        boundary_rank[s] = exact_rank(mat)

    ranks: dict[int, int] = {}
    for s in range(0, max_size + 1):
        cycles = len(by_size.get(s, ())) - boundary_rank[s]
        h = cycles - boundary_rank[s + 1]
        if h:
            ranks[s - 1] = h
    _HOMOLOGY_CACHE[key] = ranks
    return ranks


def reduced_homology_ranks(c: SimplicialComplex) -> dict[int, int]:
    """Ranks of reduced homology over Q, {dimension: rank}, zeros omitted.

    The void complex has no homology at all; the complex {{}} has rank 1
    in dimension -1.
    """
    return dict(_homology_of_key(_canonical(c.facets)))


def euler_characteristic(c: SimplicialComplex) -> int:
    """Reduced Euler characteristic, alternating face-count sum."""
    chi = 0
    for f in c.faces():
        chi += -1 if f.bit_count() % 2 == 0 else 1
    return chi


# -- Reisner's criterion ----------------------------------------------------

_REISNER_CACHE: dict[tuple[int, ...], bool] = {}


def _reisner_key(key: tuple[int, ...]) -> bool:
    cached = _REISNER_CACHE.get(key)
    if cached is not None:
        return cached
    if not key:
        _REISNER_CACHE[key] = True
        return True
    top = max(m.bit_count() for m in key) - 1
    result = True
    for d, r in _homology_of_key(key).items():
        if d < top and r:
            result = False
            break
    if result and top > 0:
        supp = 0
        for m in key:
            supp |= m
        s = supp
        while s:
            low = s & -s
            s ^= low
            link = tuple(sorted(m ^ low for m in key if m & low))
            if not _reisner_key(_canonical(link)):
                result = False
                break
    _REISNER_CACHE[key] = result
    return result


def reisner_cm_test(c: SimplicialComplex) -> bool:
    """Cohen-Macaulayness of the Stanley-Reisner ring over Q.

    Reisner: the ring is CM iff for every face F (including the empty
    face) the reduced homology of lk(F) vanishes below dim lk(F).  Links
    of faces are iterated vertex links, so the check recurses through
    vertex links with memoisation on canonical forms.
    """
    return _reisner_key(_canonical(c.facets))


# -- Hochster's formula -----------------------------------------------------

@dataclass(frozen=True)
class BettiTable:
    """Graded Betti numbers of the Stanley-Reisner quotient ring.

    ``entries[(i, j)]`` is the rank in homological degree i, internal
    degree j; the quotient convention puts a single 1 at (0, 0).
    """

    n: int
    entries: dict[tuple[int, int], int]

    @property
    def reg(self) -> int:
        return max(j - i for (i, j) in self.entries)

    @property
    def pd(self) -> int:
        return max(i for (i, _) in self.entries)

    @property
    def depth(self) -> int:
        return self.n - self.pd

    @property
    def type(self) -> int:
        pd = self.pd
        return sum(r for (i, _), r in self.entries.items() if i == pd)

    def total(self, i: int) -> int:
        return sum(r for (h, _), r in self.entries.items() if h == i)


def hochster_betti_table(c: SimplicialComplex) -> BettiTable:
    """Betti table via Hochster: beta_{i,j} sums the reduced homology of
    the induced subcomplexes on the j-element vertex subsets W, in
    dimension j - i - 1.  The W = empty term lands at (0, 0)."""
    if c.is_void:
        raise ValueError("Betti table of the zero ring is not defined")
    n = c.vertices.bit_count()
    check_cap("hochster", n, "ambient vertex set")
    entries: dict[tuple[int, int], int] = {}
    full = c.vertices
    w = full
    while True:
        j = w.bit_count()
        induced = _maximalize(m & w for m in c.facets)
        for d, r in _homology_of_key(_canonical(induced)).items():
            i = j - d - 1
            if r:
                entries[(i, j)] = entries.get((i, j), 0) + r
        if w == 0:
            break
        w = (w - 1) & full
    return BettiTable(n, entries)


# -- Hilbert data ------------------------------------------------------------

def _poly_binom(x: int, k: int) -> int:
    """Binomial coefficient as a polynomial in x, exact at integers."""
    if k < 0:
        return 0
    num = 1
    for i in range(k):
        num *= x - i
    return num // factorial(k)


@dataclass(frozen=True)
class HilbertData:
    """Hilbert-series data of a Stanley-Reisner ring.

    ``f`` starts at f_{-1} = 1; ``h`` has length d+1 where d is the Krull
    dimension (trailing zeros are kept, the a-invariant strips them);
    ``hf`` is the Hilbert function on the window [0, n]; ``hp`` are the
    Hilbert polynomial coefficients in the monomial basis.
    """

    f: tuple[int, ...]
    h: tuple[int, ...]
    d: int
    hf: tuple[int, ...]
    hp: tuple[Fraction, ...]
    a: int

    def hp_value(self, t: int) -> int:
        val = sum(coef * t**k for k, coef in enumerate(self.hp))
        if isinstance(val, Fraction):
            if val.denominator != 1:
                raise AssertionError("Hilbert polynomial not integral at an integer")
            return int(val)
        return int(val)

    @property
    def hilbertian(self) -> bool:
        """Hilbert function equals Hilbert polynomial on the whole window."""
        return all(self.hf[t] == self.hp_value(t) for t in range(len(self.hf)))


def hilbert_data(c: SimplicialComplex) -> HilbertData:
    """f-vector by face enumeration, h by binomial transform, Hilbert
    function from the series h(t)/(1-t)^d on [0, n], polynomial from the
    closed form, a-invariant = deg h - d."""
    if c.is_void:
        raise ValueError("Hilbert data of the zero ring is not defined")
    dim = c.dim
    assert dim is not None
    d = dim + 1
    counts = [0] * (d + 1)
    for face in c.faces():
        counts[face.bit_count()] += 1
    f = tuple(counts)  # f[s] = number of faces with s vertices, f[0] = 1

    h = []
    for j in range(d + 1):
        acc = 0
        for i in range(j + 1):
            acc += (-1) ** (j - i) * comb(d - i, j - i) * f[i]
        h.append(acc)
    h_t = tuple(h)

    window = c.vertices.bit_count()
    hf = []
    for m in range(window + 1):
        if d == 0:
            hf.append(h_t[m] if m < len(h_t) else 0)
        else:
            hf.append(
                sum(h_t[j] * comb(m - j + d - 1, d - 1) for j in range(min(m, d) + 1))
            )

    # Hilbert polynomial coefficients: sum_j h_j * C(t - j + d - 1, d - 1)
    hp = [Fraction(0)] * max(d, 1)
    if d > 0:
        for j, hj in enumerate(h_t):
            if hj == 0:
                continue
            poly = [Fraction(1)]
            for i in range(d - 1):
                shift = d - 1 - j - i  # factor (t + shift)
                nxt = [Fraction(0)] * (len(poly) + 1)
                for k, coef in enumerate(poly):
                    nxt[k] += coef * shift
                    nxt[k + 1] += coef
                poly = nxt
            fact = factorial(d - 1)
            for k, coef in enumerate(poly):
                hp[k] += Fraction(hj) * coef / fact
    hp_t = tuple(hp) if d > 0 else (Fraction(0),)

    deg_h = max((j for j, hj in enumerate(h_t) if hj), default=0)
    return HilbertData(f=f, h=h_t, d=d, hf=tuple(hf), hp=hp_t, a=deg_h - d)


# -- vertex decomposability ---------------------------------------------------

_VD_CACHE: dict[tuple[int, ...], bool] = {}


def _vd_key(key: tuple[int, ...]) -> bool:
    cached = _VD_CACHE.get(key)
    if cached is not None:
        return cached
    if len(key) <= 1:
        _VD_CACHE[key] = True
        return True
    facet_set = set(key)
    supp = 0
    for m in key:
        supp |= m
    result = False
    s = supp
    while s:
        low = s & -s
        s ^= low
        del_facets = _maximalize(m & ~low for m in key)
        if any(df not in facet_set for df in del_facets):
            continue  # deletion loses a facet, not a shedding vertex
        link = tuple(sorted(m ^ low for m in key if m & low))
        if _vd_key(_canonical(del_facets)) and _vd_key(_canonical(link)):
            result = True
            break
    _VD_CACHE[key] = result
    return result


def is_vertex_decomposable(c: SimplicialComplex) -> bool:
    """Boolean fast path used by the exhaustive sweeps."""
    return _vd_key(_canonical(c.facets))


def vertex_decomposable_test(c: SimplicialComplex) -> dict | None:
    """Witness tree of shedding vertices, or None.

    A simplex is the base case.  Otherwise some vertex x must satisfy:
    deletion and link at x both vertex decomposable, and every facet of
    the deletion is a facet of the whole complex.  The memoised boolean
    guides the reconstruction, so the tree is cheap and is reported in
    the original vertex labels.
    """
    if not _vd_key(_canonical(c.facets)):
        return None

    def build(facets: tuple[int, ...]) -> dict:
        if len(facets) <= 1:
            return {"simplex": [list(vertices_of(m)) for m in facets]}
        facet_set = set(facets)
        supp = 0
        for m in facets:
            supp |= m
        for v in vertices_of(supp):
            low = vbit(v)
            del_facets = _maximalize(m & ~low for m in facets)
            if any(df not in facet_set for df in del_facets):
                continue
            link = tuple(sorted(m ^ low for m in facets if m & low))
            if _vd_key(_canonical(del_facets)) and _vd_key(_canonical(link)):
                return {
                    "shedding_vertex": v,
                    "deletion": build(del_facets),
                    "link": build(link),
                }
        raise AssertionError("witness reconstruction disagrees with the memo")

    return build(c.facets)


# -- brute-force shelling ------------------------------------------------------

def _shelling_step_ok(prefix: list[int], new: int) -> bool:
    # Bjorner-Wachs condition: for every earlier facet F_i there is an
    # earlier F_j with F_j n F_k = F_k \ {v} containing F_i n F_k.
    for fi in prefix:
        inter_i = fi & new
        ok = False
        for fj in prefix:
            diff = new & ~fj
            if diff.bit_count() == 1 and inter_i & ~(fj & new) == 0:
                ok = True
                break
        if not ok:
            return False
    return True


def shellable_bruteforce_test(c: SimplicialComplex) -> bool:
    """Search all facet orderings for a shelling, with prefix pruning.

    Capped by facet count; for pure complexes the intersection condition
    is the classical one (each new facet meets the old ones in a nonempty
    union of codimension-one faces).
    """
    facets = list(c.facets)
    check_cap("shelling", len(facets), "facet count")
    if len(facets) <= 1:
        return True

    def extend(prefix: list[int], remaining: list[int]) -> bool:
        if not remaining:
            return True
        for idx, cand in enumerate(remaining):
            if _shelling_step_ok(prefix, cand):
                prefix.append(cand)
                if extend(prefix, remaining[:idx] + remaining[idx + 1:]):
                    return True
                prefix.pop()
        return False

    for idx, first in enumerate(facets):
        if extend([first], facets[:idx] + facets[idx + 1:]):
            return True
    return False


def clear_caches() -> None:
    """Drop the global memo tables (mainly for benchmarking)."""
    _HOMOLOGY_CACHE.clear()
    _REISNER_CACHE.clear()
    _VD_CACHE.clear()


def iter_submasks(full: int) -> Iterator[int]:
    """All submasks of ``full``, descending, ending with 0."""
    w = full
    while True:
        yield w
        if w == 0:
            return
        w = (w - 1) & full
