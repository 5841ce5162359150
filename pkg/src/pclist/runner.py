"""Run one algorithm on one graph, and check the result against an oracle."""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from . import oracles
from .graph_core import Graph
from .ledger import WorkLedger
from .matching_bipartite import build_bipartite_representative, hopcroft_karp
from .matching_general import maximum_matching_pclist
from .pclist_core import build_out_representative, build_plain, build_seidel_pclist
from .reachability import diameter, transitive_closure
from .traversal import connected_components, pclist_bfs, pclist_dfs

ALGOS = ("bfs", "dfs", "components", "diameter", "tc", "hk", "matching")


@dataclass
class Outcome:
    algo: str
    value: Any
    text: str
    summary: str
    ledger: WorkLedger
    m_tilde: int
    phases: int = 0
    wall_time_ns: int = 0
    extra: dict = field(default_factory=dict)


def _canonical(comp) -> list[int]:
    """Relabel component ids by first appearance."""
    seen: dict[int, int] = {}
    return [seen.setdefault(int(c), len(seen)) for c in comp]


def build(g: Graph, algo: str, repr_: str = "out", switch_set=None, plain: bool = False):
    if algo == "hk":
        if repr_ != "out":
            raise ValueError("hk runs on the bipartite out representation only")
        return build_bipartite_representative(g, switch=not plain)
    if plain:
        return build_plain(g)
    if repr_ == "seidel":
        if algo == "matching":
            raise ValueError("matching runs on the out representation only")
        if switch_set is None:
            raise ValueError("--repr seidel needs --switch-set")
        return build_seidel_pclist(g, switch_set)
    if repr_ != "out":
        raise ValueError(f"unknown representation {repr_!r}")
    return build_out_representative(g)


def run(g: Graph, algo: str, repr_: str = "out", switch_set=None, source: int = 0,
        plain: bool = False, backend: str | None = None) -> Outcome:
    if algo not in ALGOS:
        raise ValueError(f"unknown algorithm {algo!r}")
    if algo in ("bfs", "dfs") and not 0 <= source < g.n:
        raise ValueError(f"source {source} out of range [0, {g.n})")
    p = build(g, algo, repr_, switch_set, plain)
    ledger = WorkLedger()
    t0 = time.perf_counter_ns()
    phases = 0
    if algo == "bfs":
        res = pclist_bfs(p, source, ledger, backend)
        value = res.level.tolist()
        text = "levels " + " ".join(map(str, value))
        summary = str(len(res.order))
    elif algo == "dfs":
        res = pclist_dfs(p, source, ledger, backend)
        value = (res.order, res.parent.tolist())
        text = "dfs order " + " ".join(map(str, res.order))
        summary = str(len(res.order))
    elif algo == "components":
        value = _canonical(connected_components(p, ledger, backend))
        k = max(value) + 1 if value else 0
        text = f"components {k}"
        summary = str(k)
    elif algo == "diameter":
        d = diameter(p, ledger, backend)
        value = d.value
        shown = "inf" if math.isinf(d.value) else str(d.value)
        text = f"diameter {shown}"
        if math.isinf(d.value):
            text += f" (finite max {d.finite_max})"
        summary = shown
    elif algo == "tc":
        value = transitive_closure(p, ledger, backend).bits
        text = f"closure popcount {int(value.sum())}"
        summary = str(int(value.sum()))
    else:
        m = hopcroft_karp(p, ledger) if algo == "hk" else maximum_matching_pclist(p, ledger)
        value = m.mate.tolist()
        phases = m.phases
        text = f"matching {m.size}"
        summary = str(m.size)
    wall = time.perf_counter_ns() - t0
    return Outcome(algo, value, text, summary, ledger, p.m_tilde, phases, wall)


def verify(g: Graph, out: Outcome, source: int = 0) -> list[str]:
    """Differences between ``out`` and the oracle answer (empty when they agree)."""
    algo = out.algo
    if algo == "bfs":
        want = oracles.baseline_bfs(g, source)
        return _diff_lists("level", out.value, want)
    if algo == "dfs":
        order, parent = out.value
        problems = []
        reach = oracles.baseline_reachable(g, source)
        if set(order) != reach:
            problems.append(f"visited {sorted(set(order))} but reachable {sorted(reach)}")
        if not oracles.is_valid_dfs(g, order, parent):
            problems.append("parent edges do not form a valid DFS tree")
        return problems
    if algo == "components":
        comp = [-1] * g.n
        k = 0
        for v in range(g.n):
            if comp[v] < 0:
                for u in oracles.baseline_reachable(g, v):
                    comp[u] = k
                k += 1
        return _diff_lists("component", out.value, _canonical(comp))
    if algo == "diameter":
        want = oracles.diameter_fw(g)
        return [] if want == out.value else [f"diameter {out.value} but oracle says {want}"]
    if algo == "tc":
        want = oracles.transitive_closure_fw(g)
        bad = np.argwhere(want != out.value)
        return [f"closure differs at {u} -> {v}" for u, v in bad[:10].tolist()]
    mate = out.value
    problems = []
    for v, u in enumerate(mate):
        if u >= 0 and (mate[u] != v or not g.has_arc(v, u)):
            problems.append(f"invalid matched pair {v} {u}")
    want = oracles.matching_size(oracles.edmonds(g))
    got = oracles.matching_size(mate)
    if got != want:
        problems.append(f"matching size {got} but oracle says {want}")
    return problems


def _diff_lists(name: str, got, want) -> list[str]:
    got, want = list(got), list(want)
    if len(got) != len(want):
        return [f"{name} arrays differ in length: {len(got)} vs {len(want)}"]
    return [f"{name}[{i}] = {a}, expected {b}" for i, (a, b) in enumerate(zip(got, want)) if a != b][:10]
