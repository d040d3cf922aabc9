from itertools import permutations

from permcm import (
    Permutation,
    complete_graph,
    compute_invariants,
    disjoint_edges,
    graph_from_edges,
    graph_from_permutation,
    independence_invariants,
    matching_invariants,
    maximal_independent_sets,
    path_graph,
)
from bruteforce import (
    all_graphs,
    brute_induced_matching_number,
    brute_matching_number,
    brute_maximal_independent_sets,
    brute_minimal_vertex_covers,
)


class TestMaximalIndependentSets:
    def test_complete_graph_singletons(self):
        assert maximal_independent_sets(complete_graph(4)) == ((1,), (2,), (3,), (4,))

    def test_p4(self):
        assert maximal_independent_sets(path_graph(4)) == ((1, 3), (1, 4), (2, 4))

    def test_remark_graph(self, remark_graph):
        assert maximal_independent_sets(remark_graph) == ((1, 3), (2, 4), (3, 5))

    def test_matches_brute_force(self):
        for n in range(1, 6):
            for g in all_graphs(n):
                assert set(maximal_independent_sets(g)) == brute_maximal_independent_sets(g)


class TestIndependenceInvariants:
    def test_complete(self):
        alpha, tau, unmixed, covers = independence_invariants(complete_graph(5))
        assert (alpha, tau, unmixed) == (1, 4, True)
        assert len(covers) == 5

    def test_p4(self):
        alpha, tau, unmixed, _ = independence_invariants(path_graph(4))
        assert (alpha, tau, unmixed) == (2, 2, True)

    def test_p3_mixed(self):
        alpha, tau, unmixed, _ = independence_invariants(path_graph(3))
        assert (alpha, tau) == (2, 1)
        assert not unmixed

    def test_alpha_plus_tau(self):
        for g in all_graphs(4):
            alpha, tau, _, _ = independence_invariants(g)
            assert alpha + tau == g.n

    def test_cover_complement_duality(self):
        # complements of maximal independent sets are exactly the minimal
        # vertex covers; exhaustive on all small graphs, then on the
        # inversion graphs of S_6
        for n in range(1, 6):
            for g in all_graphs(n):
                _, _, _, covers = independence_invariants(g)
                assert set(covers) == brute_minimal_vertex_covers(g)
        for p in permutations(range(1, 7)):
            g = graph_from_permutation(Permutation(p))
            _, _, _, covers = independence_invariants(g)
            assert set(covers) == brute_minimal_vertex_covers(g)


class TestMatching:
    def test_two_disjoint_edges(self):
        assert matching_invariants(disjoint_edges(2)) == (2, 2)

    def test_p4(self):
        assert matching_invariants(path_graph(4)) == (2, 1)

    def test_complete_graphs(self):
        for n in range(2, 7):
            assert matching_invariants(complete_graph(n)) == (n // 2, 1)

    def test_matches_brute_force(self):
        for n in range(1, 6):
            for g in all_graphs(n):
                m, im = matching_invariants(g)
                assert m == brute_matching_number(g)
                assert im == brute_induced_matching_number(g)

    def test_im_le_m_le_tau(self):
        for g in all_graphs(5):
            inv = compute_invariants(g)
            assert inv.induced_matching <= inv.matching <= inv.tau


class TestInvariantSet:
    def test_remark_graph(self, remark_graph):
        inv = compute_invariants(remark_graph)
        assert inv.alpha == 2 and inv.tau == 3
        assert inv.unmixed
        assert inv.matching == 2 and inv.induced_matching == 1

    def test_unmixed_iff_equal_sizes(self):
        g = graph_from_edges(4, [(1, 2), (1, 3), (1, 4)])  # star
        inv = compute_invariants(g)
        assert not inv.unmixed  # {2,3,4} and {1}
