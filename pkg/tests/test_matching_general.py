import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import graphs
from pclist import oracles
from pclist.graph_core import (
    GenSpec,
    complete_graph,
    cycle_graph,
    empty_graph,
    from_arcs,
    generate,
    path_graph,
    petersen_graph,
)
from pclist.ledger import WorkLedger
from pclist.matching_general import (
    OUTER,
    OutList,
    SearchState,
    find_ap_set,
    lookup_vectors,
    maximum_matching,
)
from pclist.pclist_core import ModeError, build_in_representative, build_out_representative


def _mate(n, pairs):
    mate = np.full(n, -1, dtype=np.int64)
    for a, b in pairs:
        mate[a], mate[b] = b, a
    return mate


def _check_paths(g, mate, paths):
    used = [v for p in paths for v in p]
    assert len(used) == len(set(used))
    for p in paths:
        assert len(p) % 2 == 0
        assert mate[p[0]] < 0 and mate[p[-1]] < 0
        for i, (a, b) in enumerate(zip(p, p[1:])):
            assert g.has_arc(a, b)
            assert (mate[a] == b) == (i % 2 == 1)


def _with_pendants(k):
    """Odd cycle 0..k-1 with a pendant hanging off every even cycle vertex."""
    arcs = [(i, (i + 1) % k) for i in range(k)]
    nxt = k
    for i in range(0, k, 2):
        arcs.append((i, nxt))
        nxt += 1
    return from_arcs(nxt, arcs, directed=False)


class TestFindAp:
    def test_isolated_vertex(self):
        s = SearchState(build_out_representative(empty_graph(3)), _mate(3, []))
        assert not s.start_root(0)
        assert s.paths == [] and s.forest.blossoms() == []

    def test_c5_forms_a_blossom(self):
        g = cycle_graph(5)
        s = SearchState(build_out_representative(g), _mate(5, [(1, 2), (3, 4)]))
        assert not s.start_root(0)
        assert s.forest.blossoms() == [[0, 1, 2, 3, 4]]
        assert all(s.label[v] == OUTER for v in range(5))

    def test_p4_path(self):
        s = SearchState(build_out_representative(path_graph(4)), _mate(4, [(1, 2)]))
        assert s.start_root(0)
        assert s.paths == [[0, 1, 2, 3]]

    def test_path_through_blossom(self):
        # from 0 the search walks 0-1-2-3-4, closes the blossom at 4-0 and only
        # then can scan 3 (previously inner) and reach the free pendant 5
        g = from_arcs(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (3, 5)], directed=False)
        mate = _mate(6, [(1, 2), (3, 4)])
        s = SearchState(build_out_representative(g), mate)
        assert s.start_root(0)
        _check_paths(g, mate, s.paths)
        assert s.blossom_steps == 1
        assert s.paths == [[0, 4, 3, 5]]

    def test_non_outer_vertex_rejected(self):
        s = SearchState(build_out_representative(path_graph(3)), _mate(3, []))
        with pytest.raises(ValueError):
            s.find_ap(1)
        s.start_root(0)
        with pytest.raises(ValueError):
            s.start_root(0)

    def test_needs_out_mode(self):
        with pytest.raises(ModeError):
            SearchState(build_in_representative(path_graph(3)), _mate(3, []))


class TestFindApSet:
    def test_maximum_on_k4(self):
        paths, _ = find_ap_set(build_out_representative(complete_graph(4)), _mate(4, [(0, 1), (2, 3)]))
        assert paths == []

    def test_edgeless(self):
        assert find_ap_set(build_out_representative(empty_graph(4)), _mate(4, [])) == ([], [])

    def test_c5_with_pendant(self):
        g = from_arcs(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5)], directed=False)
        mate = _mate(6, [(1, 2), (3, 4)])
        paths, _ = find_ap_set(build_out_representative(g), mate)
        assert len(paths) == 1
        _check_paths(g, mate, paths)
        assert maximum_matching(g).size == 3

    @given(graphs(max_n=11, directed=False), st.data())
    def test_paths_exist_iff_not_maximum(self, g, data):
        # random starting matching, built greedily from a shuffled edge order
        edges = sorted({(min(u, v), max(u, v)) for u, v in g.arcs()})
        order = data.draw(st.permutations(edges)) if edges else []
        mate = _mate(g.n, [])
        for a, b in order:
            if mate[a] < 0 and mate[b] < 0 and data.draw(st.booleans()):
                mate[a], mate[b] = b, a
        p = build_out_representative(g)
        led = WorkLedger()
        paths, blossoms = find_ap_set(p, mate, led)
        _check_paths(g, mate, paths)
        current = oracles.matching_size(mate.tolist())
        assert bool(paths) == (current < oracles.max_matching_bruteforce(g))
        for b in blossoms:
            assert len(b) % 2 == 1
        assert led.total() <= 8 * (g.n + p.m_tilde)

    def test_dense_work_bound(self):
        for n in (64, 128, 256):
            g = generate(GenSpec("complement_of_sparse", n=n, avg_degree=4, seed=n))
            p = build_out_representative(g)
            m = maximum_matching(g)
            assert m.size == oracles.matching_size(oracles.edmonds(g))
            for led in m.phase_ledgers:
                assert led.total() <= 8 * (n + p.m_tilde)


class TestStructures:
    def test_lookup_vectors_match_graph(self):
        rng = np.random.default_rng(8)
        for _ in range(50):
            g = generate(GenSpec("gnp", n=int(rng.integers(2, 16)), p=float(rng.random()),
                                 seed=int(rng.integers(1 << 30))))
            p = build_out_representative(g)
            a = g.adjacency_matrix()
            vecs = lookup_vectors(p)
            assert set(vecs) == set(np.flatnonzero(p.out_bits).tolist())
            for v, row in vecs.items():
                assert np.array_equal(row, a[v])

    def test_out_list(self):
        out = OutList()
        for r in (4, 2, 7, 1):
            out.append(r)
        out.remove(1)
        out.remove(2)
        assert out.entries() == [0, 3]
        assert out.next_alive(1) == 3 and out.next_alive(4) == 4

    @given(graphs(max_n=10, directed=False))
    def test_out_order_and_aux_lists(self, g):
        p = build_out_representative(g)
        s = SearchState(p, _mate(g.n, []))
        seen = []
        orig = s._make_outer

        def spy(v, kind):
            orig(v, kind)
            seen.append(s.forest.entry[s.forest.find(v)])
        s._make_outer = spy
        for r in range(g.n):
            if s.u.owner[r] == 0:
                s.start_root(r)
            # entries are handed out in labelling order
            live = [e for e in seen if e >= 0]
            assert live == sorted(live)
        for x, aux in s.aux.items():
            assert len(aux) == len(set(aux))
            assert len(aux) <= len(p.stored(x))


class TestMaximumMatching:
    def test_examples(self):
        assert maximum_matching(complete_graph(4)).size == 2
        assert maximum_matching(cycle_graph(5)).size == 2
        assert maximum_matching(petersen_graph()).size == 5

    def test_directed_rejected(self):
        with pytest.raises(ValueError):
            maximum_matching(path_graph(3, directed=True))

    @pytest.mark.parametrize("k", [3, 5, 7, 9, 11])
    def test_odd_cycles_with_pendants(self, k):
        g = _with_pendants(k)
        m = maximum_matching(g)
        assert m.size == oracles.matching_size(oracles.edmonds(g))

    @given(graphs(max_n=10, directed=False))
    def test_matches_brute_force(self, g):
        m = maximum_matching(g)
        assert m.size == oracles.max_matching_bruteforce(g)
        for v, u in enumerate(m.mate):
            if u >= 0:
                assert m.mate[u] == v and g.has_arc(v, int(u))

    def test_long_path_and_cycle(self):
        assert maximum_matching(path_graph(3001)).size == 1500
        assert maximum_matching(cycle_graph(2001)).size == 1000
