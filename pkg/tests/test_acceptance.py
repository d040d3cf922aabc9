"""Acceptance suite: one test per criterion, exact tolerances throughout.

Every value is integer arithmetic, so each criterion demands exact
equality and an empty discrepancy list.  Each test prints a single
pass/fail line (visible with ``pytest -v -s``).
"""

import time

from permcm import (
    Permutation,
    classify,
    disjoint_edges,
    graph_from_permutation,
    hilbert_data,
    hochster_betti_table,
    independence_complex,
    path_graph,
)
from permcm.cli import run_verify


def _report(number: int, name: str, ok: bool, extra: str = "") -> None:
    status = "PASS" if ok else "FAIL"
    tail = f" ({extra})" if extra else ""
    print(f"criterion {number:2d} [{name}]: {status}{tail}")


def _sweep_all(theorem: str, ns: range) -> tuple[bool, int, float]:
    t0 = time.time()
    ok = True
    checked = 0
    for n in ns:
        result = run_verify(theorem, n)
        checked += result.checked
        if not result.ok:
            ok = False
            print(f"  discrepancies at n={n}: {result.discrepancies[:3]}")
    return ok, checked, time.time() - t0


def test_criterion_01_vd_equivalence():
    # reisner_cm(D_G) <=> unique-partition CM <=> unmixed and vertex
    # decomposable, exhaustively over S_3..S_7
    ok, checked, elapsed = _sweep_all("vd", range(3, 8))
    _report(1, "vd equivalence n=3..7", ok, f"{checked} graphs, {elapsed:.1f}s")
    assert ok
    assert elapsed <= 600, f"runtime budget exceeded: {elapsed:.1f}s"


def test_criterion_02_cm_partition_consistency():
    # CM graphs have exactly one partition into alpha(G) maximal cliques;
    # unmixed non-CM graphs have zero or at least two
    ok, checked, elapsed = _sweep_all("cm", range(3, 8))
    _report(2, "partition counts n=3..7", ok, f"{checked} graphs, {elapsed:.1f}s")
    assert ok


def test_criterion_03_gorenstein_structure():
    # (reisner CM and Betti type 1) <=> disjoint union of edges, for
    # isolated-free permutation graphs up to n=7
    ok, checked, elapsed = _sweep_all("goren", range(3, 8))
    _report(3, "Gorenstein structure n=3..7", ok, f"{checked} graphs, {elapsed:.1f}s")
    assert ok


def test_criterion_04_nearly_gorenstein_structure():
    # nearly-Gorenstein flag true exactly on K_n and path complements
    # (n >= 3), whose independence complexes are isolated points or a
    # path complex
    ok, checked, elapsed = _sweep_all("nearly", range(3, 8))
    _report(4, "nearly Gorenstein n=3..7", ok, f"{checked} graphs, {elapsed:.1f}s")
    assert ok


def test_criterion_05_gap_witness():
    # every Gorenstein permutation graph on <= 8 vertices: deleting the
    # closed neighbourhood of any independent set of size alpha-2 leaves
    # a structural 2K_2
    ok, checked, elapsed = _sweep_all("gap", range(2, 9))
    _report(5, "Gorenstein gap witness n<=8", ok, f"{checked} graphs, {elapsed:.1f}s")
    assert ok
    assert checked >= 1  # the sweep must actually exercise Gorenstein graphs


def test_criterion_06_a_invariant():
    # reg(Hochster) = im(G) for every permutation graph n <= 6; for the
    # CM ones a = im + tau - n exactly and the Hilbertian flag matches
    # Hilbert function vs polynomial on [0, n]
    t0 = time.time()
    ok = True
    checked = 0
    for n in range(1, 7):
        result = run_verify("ainv", n)
        checked += result.checked
        ok = ok and result.ok
    elapsed = time.time() - t0
    _report(6, "a-invariant and regularity n<=6", ok, f"{checked} graphs, {elapsed:.1f}s")
    assert ok
    assert elapsed <= 120, f"runtime budget exceeded: {elapsed:.1f}s"


def test_criterion_07_bicm():
    # (cm and im=1) <=> (reisner CM and chordal complement), n <= 6
    ok, checked, elapsed = _sweep_all("bicm", range(1, 7))
    _report(7, "bi-Cohen-Macaulay n<=6", ok, f"{checked} graphs, {elapsed:.1f}s")
    assert ok


def test_criterion_08_cover_ideal_splittings():
    # vertex splittable <=> linear quotients <=> CM, over the unmixed
    # permutation graphs with n <= 6
    ok, checked, elapsed = _sweep_all("covs", range(1, 7))
    _report(8, "cover ideal splittings n<=6", ok, f"{checked} graphs, {elapsed:.1f}s")
    assert ok


def test_criterion_09_shedding_extractor():
    # every CM permutation graph n <= 7 yields a certificate whose steps
    # re-verify independently; the claim-failure error never fires
    ok, checked, elapsed = _sweep_all("shed", range(1, 8))
    _report(9, "shedding extractor n<=7", ok, f"{checked} graphs, {elapsed:.1f}s")
    assert ok


def test_criterion_10_regression_fixtures(remark_graph):
    failures = []

    r = classify(remark_graph)
    if not (
        r.is_permutation
        and r.unmixed
        and r.vertex_decomposable is False
        and r.cm is False
        and len(r.witnesses["clique_partitions"]) == 2
    ):
        failures.append("remark graph flags")

    g = graph_from_permutation(Permutation((2, 4, 5, 1, 3)))
    if g.edges() != ((1, 2), (1, 4), (1, 5), (3, 4), (3, 5)):
        failures.append("inversion graph edge list")

    c = independence_complex(disjoint_edges(2))
    hd = hilbert_data(c)
    bt = hochster_betti_table(c)
    if not (hd.h == (1, 2, 1) and hd.a == 0 and bt.type == 1):
        failures.append("2K_2 Hilbert/Betti data")

    rp = classify(path_graph(4))
    if not (rp.a_invariant == -1 and rp.bicm is True and rp.hilbertian is True):
        failures.append("P_4 classification")

    ok = not failures
    _report(10, "regression fixtures", ok, "exact equality" if ok else str(failures))
    assert ok, failures
