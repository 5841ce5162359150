import itertools

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import graphs
from pclist import oracles
from pclist.graph_core import (
    complete_graph,
    cycle_graph,
    empty_graph,
    from_adjacency_matrix,
    path_graph,
    petersen_graph,
)


def test_out_switch_everything_on_k4():
    assert oracles.apply_switches(complete_graph(4), out_set=range(4)).m == 0


def test_seidel_switch_everything_is_identity():
    g = petersen_graph()
    assert oracles.apply_switches(g, seidel_set=range(10)) == g


def test_out_switch_on_directed_path():
    h = oracles.apply_switches(path_graph(3, directed=True), out_set=[0])
    assert sorted(h.arcs()) == [(0, 2), (1, 2)]


@given(graphs(max_n=8), st.data())
def test_switching_is_involutive_and_commutes(g, data):
    if g.n == 0:
        return
    vs = data.draw(st.lists(st.integers(0, g.n - 1), max_size=4, unique=True))
    once = oracles.apply_switches(g, out_set=vs)
    assert oracles.apply_switches(once, out_set=vs).edge_set() == g.edge_set()
    h = g
    for v in data.draw(st.permutations(vs)):
        h = oracles.apply_switches(h, out_set=[v])
    assert h.edge_set() == once.edge_set()


def test_seidel_rejects_directed():
    with pytest.raises(ValueError):
        oracles.apply_switches(path_graph(3, directed=True), seidel_set=[0])


def test_brute_min_examples():
    assert oracles.brute_min_representative(complete_graph(4), "out") == 0
    # counted in arcs: switching {0, 1, 3} leaves three edges
    assert oracles.brute_min_representative(cycle_graph(5), "seidel") == 6
    for kind in ("out", "in", "seidel", "gale_berlekamp"):
        assert oracles.brute_min_representative(empty_graph(3), kind) == 0


def test_brute_min_caps():
    with pytest.raises(oracles.SizeError):
        oracles.brute_min_representative(empty_graph(15), "out")
    with pytest.raises(oracles.SizeError):
        oracles.brute_min_representative(empty_graph(11), "gale_berlekamp")


@pytest.mark.parametrize("g", [path_graph(5), cycle_graph(5), petersen_graph()])
def test_brute_min_seidel_by_enumeration(g):
    want = min(oracles.apply_switches(g, seidel_set=s).m
               for k in range(g.n + 1) for s in itertools.combinations(range(g.n), k))
    assert oracles.brute_min_representative(g, "seidel") == want


def test_reference_outputs():
    assert oracles.diameter_fw(path_graph(4)) == 3
    assert oracles.max_matching_bruteforce(cycle_graph(5)) == 2
    assert oracles.matching_size(oracles.edmonds(petersen_graph())) == 5
    assert oracles.max_matching_bruteforce(petersen_graph()) == 5


def test_matching_cap():
    with pytest.raises(oracles.SizeError):
        oracles.max_matching_bruteforce(empty_graph(13))


def test_baseline_bfs_levels():
    assert oracles.baseline_bfs(path_graph(4), 1) == [1, 0, 1, 2]


def test_is_valid_dfs_rejects_bfs_order():
    g = complete_graph(4)
    # star-shaped tree is a BFS tree, never a DFS tree of K_4
    assert not oracles.is_valid_dfs(g, [0, 1, 2, 3], [-1, 0, 0, 0])
    assert oracles.is_valid_dfs(g, [0, 1, 2, 3], [-1, 0, 1, 2])


@given(graphs(max_n=10, directed=False))
def test_edmonds_agrees_with_brute_force(g):
    mate = oracles.edmonds(g)
    for v, u in enumerate(mate):
        if u >= 0:
            assert mate[u] == v and g.has_arc(v, u)
    assert oracles.matching_size(mate) == oracles.max_matching_bruteforce(g)


def test_bipartite_oracles_agree():
    rng = np.random.default_rng(3)
    for _ in range(200):
        na, nb = (int(x) for x in rng.integers(0, 9, 2))
        n = na + nb
        a = np.zeros((n, n), dtype=bool)
        a[:na, na:] = rng.random((na, nb)) < rng.random()
        g = from_adjacency_matrix(a | a.T, directed=False)
        side = [0] * na + [1] * nb
        want = oracles.bipartite_matching_bruteforce(g, side)
        assert oracles.bipartite_matching_kuhn(g, side) == want
        assert oracles.matching_size(oracles.edmonds(g)) == want
