import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from pclist import oracles
from pclist.graph_core import (
    bipartite_complement_matching,
    cycle_graph,
    empty_graph,
    from_adjacency_matrix,
    from_arcs,
    path_graph,
)
from pclist.ledger import WorkLedger
from pclist.matching_bipartite import (
    bfs_star,
    bipartite_represented_graph,
    build_bipartite_representative,
    dfs_star,
    hopcroft_karp,
    maximum_bipartite_matching,
    two_coloring,
)


def complete_bipartite(a, b):
    n = a + b
    m = np.zeros((n, n), dtype=bool)
    m[:a, a:] = True
    return from_adjacency_matrix(m | m.T, directed=False)


def _free(n):
    return np.full(n, -1, dtype=np.int64)


@st.composite
def bipartite_graphs(draw, max_side=8):
    na = draw(st.integers(0, max_side))
    nb = draw(st.integers(0, max_side))
    bits = draw(st.lists(st.booleans(), min_size=na * nb, max_size=na * nb))
    n = na + nb
    a = np.zeros((n, n), dtype=bool)
    if na and nb:
        a[:na, na:] = np.array(bits, dtype=bool).reshape(na, nb)
    return from_adjacency_matrix(a | a.T, directed=False), [0] * na + [1] * nb


class TestRepresentative:
    def test_dense_family_switches_everything(self):
        bp = build_bipartite_representative(bipartite_complement_matching(8), [0] * 8 + [1] * 8)
        assert bp.switched.all() and bp.m_tilde == 16
        assert bp.rows[0] == [8]

    def test_round_trip(self):
        g = complete_bipartite(3, 4)
        bp = build_bipartite_representative(g)
        assert bipartite_represented_graph(bp) == g

    def test_plain_baseline(self):
        g = complete_bipartite(3, 3)
        bp = build_bipartite_representative(g, switch=False)
        assert not bp.switched.any() and bp.m_tilde == g.m

    def test_rejects_odd_cycle(self):
        with pytest.raises(ValueError):
            two_coloring(cycle_graph(5))
        with pytest.raises(ValueError):
            maximum_bipartite_matching(cycle_graph(5))

    def test_rejects_bad_side_and_directed(self):
        with pytest.raises(ValueError):
            build_bipartite_representative(path_graph(3), [0, 0, 1])
        with pytest.raises(ValueError):
            build_bipartite_representative(path_graph(3, directed=True))


class TestBFSStar:
    def test_k22(self):
        bp = build_bipartite_representative(complete_bipartite(2, 2), [0, 0, 1, 1])
        lp = bfs_star(bp, _free(4))
        assert lp.k == 2 and lp.levels[1] == [0, 1] and sorted(lp.levels[2]) == [2, 3]

    def test_perfect_matching_gives_empty_partition(self):
        bp = build_bipartite_representative(complete_bipartite(2, 2), [0, 0, 1, 1])
        lp = bfs_star(bp, np.array([2, 3, 0, 1]))
        assert lp.empty and lp.levels == [[]]

    def test_k33_minus_matching(self):
        # A = 0..2, B = 3..5, a_i misses b_i; M = {a0 b1}
        g = bipartite_complement_matching(3)
        bp = build_bipartite_representative(g, [0] * 3 + [1] * 3)
        mate = _free(6)
        mate[0], mate[4] = 4, 0
        lp = bfs_star(bp, mate)
        # free a1, a2 reach b0 (free) and b2 at level 2; k stops there
        assert lp.k == 2
        assert sorted(lp.levels[1]) == [1, 2]
        assert sorted(lp.levels[2]) == [3, 4, 5]

    def test_work_bound(self):
        for k in (16, 64):
            g = bipartite_complement_matching(k)
            bp = build_bipartite_representative(g, [0] * k + [1] * k)
            led = WorkLedger()
            bfs_star(bp, _free(2 * k), led)
            assert led.total() <= 8 * (2 * k + bp.m_tilde)


class TestDFSStar:
    def test_empty_partition(self):
        bp = build_bipartite_representative(complete_bipartite(1, 1))
        lp = bfs_star(bp, np.array([1, 0]))
        assert dfs_star(bp, lp, np.array([1, 0])) == []

    def test_k11(self):
        bp = build_bipartite_representative(complete_bipartite(1, 1), [0, 1])
        mate = _free(2)
        assert dfs_star(bp, bfs_star(bp, mate), mate) == [[0, 1]]

    def test_k33(self):
        bp = build_bipartite_representative(complete_bipartite(3, 3), [0] * 3 + [1] * 3)
        mate = _free(6)
        paths = dfs_star(bp, bfs_star(bp, mate), mate)
        assert len(paths) == 3 and all(len(p) == 2 for p in paths)
        assert len({v for p in paths for v in p}) == 6


class TestHopcroftKarp:
    def test_sizes(self):
        assert maximum_bipartite_matching(complete_bipartite(3, 3)).size == 3
        assert maximum_bipartite_matching(empty_graph(6), [0, 0, 0, 1, 1, 1]).size == 0
        m = maximum_bipartite_matching(bipartite_complement_matching(8), [0] * 8 + [1] * 8)
        assert m.size == 8

    def test_length_three_augmentation(self):
        bp = build_bipartite_representative(path_graph(4), [0, 1, 0, 1])
        mate = np.array([-1, 2, 1, -1])
        lp = bfs_star(bp, mate)
        assert lp.k == 4
        assert dfs_star(bp, lp, mate) == [[0, 1, 2, 3]]

    def test_last_phase_is_empty(self):
        m = maximum_bipartite_matching(path_graph(4), [0, 1, 0, 1])
        assert m.size == 2 and m.path_lengths == [[1, 1], []]

    @given(bipartite_graphs())
    def test_matches_brute_force(self, gs):
        g, side = gs
        m = maximum_bipartite_matching(g, side)
        assert m.size == oracles.bipartite_matching_bruteforce(g, side)
        for v, u in enumerate(m.mate):
            if u >= 0:
                assert m.mate[u] == v and g.has_arc(v, int(u))
        n = g.n
        assert m.phases <= 2 * math.ceil(math.sqrt(n)) + 1
        for lengths in m.path_lengths:
            # a phase only augments along shortest paths
            assert len(set(lengths)) <= 1

    @given(bipartite_graphs(max_side=6))
    def test_phase_paths_are_disjoint(self, gs):
        g, side = gs
        bp = build_bipartite_representative(g, side)
        mate = _free(g.n)
        while True:
            lp = bfs_star(bp, mate)
            paths = dfs_star(bp, lp, mate)
            if not paths:
                break
            used = [v for p in paths for v in p]
            assert len(used) == len(set(used))
            for p in paths:
                assert len(p) - 1 == lp.k - 1
                assert mate[p[0]] < 0 and mate[p[-1]] < 0
                for i, (a, b) in enumerate(zip(p, p[1:])):
                    assert g.has_arc(a, b)
                    assert (mate[a] == b) == (i % 2 == 1)
            for p in paths:
                for i in range(0, len(p), 2):
                    mate[p[i]], mate[p[i + 1]] = p[i + 1], p[i]

    def test_dense_per_phase_bound(self):
        for k in (64, 128):
            g = bipartite_complement_matching(k)
            bp = build_bipartite_representative(g, [0] * k + [1] * k)
            m = hopcroft_karp(bp)
            assert m.size == k
            for led in m.phase_ledgers:
                assert led.total() <= 8 * (2 * k + bp.m_tilde)

    def test_disconnected_pieces(self):
        g = from_arcs(6, [(0, 3), (1, 3), (2, 5)], directed=False)
        assert maximum_bipartite_matching(g).size == 2
