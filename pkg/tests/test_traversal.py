import numpy as np
import pytest
from hypothesis import given

from conftest import graph_and_subset, graphs
from pclist import oracles
from pclist.accel import default_backend, kernels
from pclist.graph_core import (
    complement,
    complete_graph,
    empty_graph,
    from_adjacency_matrix,
    from_arcs,
    path_graph,
)
from pclist.ledger import WorkLedger
from pclist.pclist_core import ModeError, build_out_representative, build_seidel_pclist
from pclist.traversal import connected_components, pclist_bfs, pclist_dfs


def _bound(p, led):
    return led.total() <= 8 * (p.n + p.m_tilde)


class TestBFS:
    def test_path(self, backend):
        r = pclist_bfs(build_out_representative(path_graph(3)), 0, backend=backend)
        assert r.level.tolist() == [0, 1, 2]
        assert r.order == [0, 1, 2]

    def test_complete_graph(self, backend):
        r = pclist_bfs(build_out_representative(complete_graph(4)), 0, backend=backend)
        assert r.level.tolist() == [0, 1, 1, 1]

    def test_complement_of_p4(self, backend):
        p = build_out_representative(complement(path_graph(4)))
        assert np.flatnonzero(p.switched).tolist() == [0, 3]
        r = pclist_bfs(p, 0, backend=backend)
        assert r.level.tolist() == [0, 2, 1, 1]
        assert r.marks_clear

    def test_unreachable(self, backend):
        g = from_arcs(4, [(0, 1), (2, 3)])
        r = pclist_bfs(build_out_representative(g), 0, backend=backend)
        assert r.level.tolist() == [0, 1, -1, -1]
        assert r.visited == {0, 1}

    def test_bad_source(self):
        with pytest.raises(ValueError):
            pclist_bfs(build_out_representative(path_graph(3)), 3)

    @given(graphs(max_n=12))
    def test_matches_baseline(self, g):
        p = build_out_representative(g)
        for s in range(g.n):
            led = WorkLedger()
            r = pclist_bfs(p, s, led, "python")
            assert r.level.tolist() == oracles.baseline_bfs(g, s)
            assert r.marks_clear and _bound(p, led)
            for v in r.order[1:]:
                assert g.has_arc(int(r.parent[v]), v)
                assert r.level[v] == r.level[r.parent[v]] + 1

    @given(graph_and_subset(max_n=12))
    def test_seidel_matches_baseline(self, gs):
        g, s = gs
        p = build_seidel_pclist(g, s)
        for src in range(g.n):
            led = WorkLedger()
            r = pclist_bfs(p, src, led, "python")
            assert r.level.tolist() == oracles.baseline_bfs(g, src)
            assert r.marks_clear and _bound(p, led)

    def test_complete_graph_work_is_linear(self, backend):
        for n in (8, 64, 256):
            led = WorkLedger()
            pclist_bfs(build_out_representative(complete_graph(n)), 0, led, backend)
            assert led.total() <= 8 * n


class TestDFS:
    def test_path(self, backend):
        r = pclist_dfs(build_out_representative(path_graph(3)), 0, backend=backend)
        assert r.order == [0, 1, 2]
        assert r.parent.tolist() == [-1, 0, 1]

    def test_complete_graph_gives_a_path(self, backend):
        r = pclist_dfs(build_out_representative(complete_graph(4)), 0, backend=backend)
        assert r.order == [0, 1, 2, 3]
        assert r.parent.tolist() == [-1, 0, 1, 2]

    def test_complement_of_p4(self, backend):
        g = complement(path_graph(4))
        r = pclist_dfs(build_out_representative(g), 0, backend=backend)
        assert r.visited == {0, 1, 2, 3}
        assert oracles.is_valid_dfs(g, r.order, r.parent)

    @given(graphs(max_n=12))
    def test_valid_dfs(self, g):
        p = build_out_representative(g)
        for s in range(g.n):
            led = WorkLedger()
            r = pclist_dfs(p, s, led, "python")
            assert r.visited == oracles.baseline_reachable(g, s)
            assert oracles.is_valid_dfs(g, r.order, r.parent)
            assert _bound(p, led)

    @given(graph_and_subset(max_n=12))
    def test_seidel_valid_dfs(self, gs):
        g, s = gs
        p = build_seidel_pclist(g, s)
        for src in range(g.n):
            led = WorkLedger()
            r = pclist_dfs(p, src, led, "python")
            assert r.visited == oracles.baseline_reachable(g, src)
            assert oracles.is_valid_dfs(g, r.order, r.parent)
            assert _bound(p, led)


class TestComponents:
    def test_empty(self, backend):
        comp = connected_components(build_out_representative(empty_graph(3)), backend=backend)
        assert len(set(comp.tolist())) == 3

    def test_complete(self, backend):
        comp = connected_components(build_out_representative(complete_graph(4)), backend=backend)
        assert set(comp.tolist()) == {0}

    def test_complement_of_two_triangles(self, backend):
        tri = from_arcs(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)], directed=False)
        comp = connected_components(build_out_representative(complement(tri)), backend=backend)
        assert set(comp.tolist()) == {0}

    def test_directed_rejected(self):
        with pytest.raises(ModeError):
            connected_components(build_out_representative(path_graph(3, directed=True)))

    @given(graph_and_subset(max_n=12))
    def test_partition_matches_reachability(self, gs):
        g, s = gs
        for p in (build_out_representative(g), build_seidel_pclist(g, s)):
            comp = connected_components(p, backend="python")
            for v in range(g.n):
                same = {u for u in range(g.n) if comp[u] == comp[v]}
                assert same == oracles.baseline_reachable(g, v)


def test_backends_agree():
    rng = np.random.default_rng(4)
    for t in range(30):
        n = int(rng.integers(1, 30))
        a = np.triu(rng.random((n, n)) < rng.random(), 1)
        g = from_adjacency_matrix(a | a.T, directed=False)
        s = np.flatnonzero(rng.random(n) < 0.5).tolist()
        for p in (build_out_representative(g), build_seidel_pclist(g, s)):
            for fn in (pclist_bfs, pclist_dfs):
                la, lb = WorkLedger(), WorkLedger()
                ra = fn(p, 0, la, "python")
                rb = fn(p, 0, lb, "numba")
                assert ra.order == rb.order and la.counts == lb.counts
                assert np.array_equal(ra.parent, rb.parent)


def test_backend_flag(monkeypatch):
    monkeypatch.setenv("PCLIST_DISABLE_NUMBA", "1")
    assert default_backend() == "python"
    monkeypatch.delenv("PCLIST_DISABLE_NUMBA")
    assert default_backend() == "numba"
    with pytest.raises(ValueError):
        kernels("fortran")
