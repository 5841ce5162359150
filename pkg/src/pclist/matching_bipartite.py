"""Hopcroft-Karp maximum bipartite matching on bipartite pc-lists.

A bipartite out-switch of ``v`` complements its neighbourhood inside the
opposite side only.  Each phase runs a level BFS that keeps the
undiscovered vertices in two ordered lists (one per side) and records the
levels as an array of lists, then a DFS restricted to the next level list
that peels off vertex-disjoint shortest augmenting paths.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field

import numpy as np

from .dllist import NIL, ComplementCursor, ElementList, PlainCursor, VertexLists
from .graph_core import Graph, from_arcs
from .ledger import WorkLedger

SIDE_A = 0
SIDE_B = 1


@dataclass(eq=False)
class BipartitePCList:
    n: int
    side: np.ndarray       # 0 for A, 1 for B
    switched: np.ndarray   # bool
    rows: list[list[int]]  # sorted; cross-side non-neighbours when switched

    @property
    def m_tilde(self) -> int:
        return sum(len(r) for r in self.rows)

    def side_members(self, s: int) -> list[int]:
        return np.flatnonzero(self.side == s).tolist()


@dataclass
class LevelPartition:
    """``levels[i]`` lists the vertices at alternating BFS level i (level 0 is the
    virtual super-source and is empty); ``k`` is the level of the first free
    B-vertex, or 0 when none is reachable."""

    levels: list[list[int]]
    k: int
    level: list[int]

    @property
    def empty(self) -> bool:
        return self.k == 0


@dataclass
class Matching:
    mate: np.ndarray
    phases: int = 0
    phase_ledgers: list[WorkLedger] = field(default_factory=list)
    path_lengths: list[list[int]] = field(default_factory=list)

    @property
    def size(self) -> int:
        return int((self.mate >= 0).sum()) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(v, int(u)) for v, u in enumerate(self.mate) if u > v]


def two_coloring(g: Graph) -> np.ndarray:
    """Side assignment by BFS; raises ValueError when g is not bipartite."""
    side = np.full(g.n, -1, dtype=np.int64)
    for s in range(g.n):
        if side[s] >= 0:
            continue
        side[s] = SIDE_A
        q = deque([s])
        while q:
            v = q.popleft()
            for u in g.neighbors(v):
                if side[u] < 0:
                    side[u] = 1 - side[v]
                    q.append(int(u))
                elif side[u] == side[v]:
                    raise ValueError("graph is not bipartite")
    return side


def build_bipartite_representative(g: Graph, side=None, switch: bool = True) -> BipartitePCList:
    """Switch v iff it has more than half of the opposite side as neighbours.

    ``switch=False`` gives the plain adjacency-list baseline.
    """
    if g.directed:
        raise ValueError("bipartite matching needs an undirected graph")
    side = two_coloring(g) if side is None else np.asarray(side, dtype=np.int64)
    counts = np.bincount(side, minlength=2)
    deg = g.out_degrees()
    switched = (2 * deg > counts[1 - side]) & switch
    rows = []
    for v in range(g.n):
        nbr = g.neighbors(v)
        if np.any(side[nbr] == side[v]):
            raise ValueError("edge inside one side of the bipartition")
        if switched[v]:
            other = np.flatnonzero(side == 1 - side[v])
            rows.append(np.setdiff1d(other, nbr, assume_unique=True).tolist())
        else:
            rows.append(nbr.tolist())
    return BipartitePCList(g.n, side, switched, rows)


def bipartite_represented_graph(bp: BipartitePCList) -> Graph:
    arcs = []
    for v in range(bp.n):
        if bp.switched[v]:
            other = set(bp.side_members(1 - bp.side[v])) - set(bp.rows[v])
            arcs.extend((v, u) for u in other)
        else:
            arcs.extend((v, u) for u in bp.rows[v])
    g = from_arcs(bp.n, arcs, directed=True)
    return Graph(g.n, g.indptr.copy(), g.indices.copy(), False)


def bfs_star(bp: BipartitePCList, mate, ledger: WorkLedger | None = None) -> LevelPartition:
    """Alternating level BFS from all free A-vertices, cut after level k."""
    ledger = ledger if ledger is not None else WorkLedger()
    n = bp.n
    side = bp.side
    u = VertexLists(n, 2)
    for v in range(n):
        u.append(int(side[v]), v)
    ledger.charge("ledger_misc", n)
    level = [-1] * n
    levels: list[list[int]] = [[]]
    mark = [False] * n
    q = deque()

    def discover(w, lvl):
        u.remove(w)
        level[w] = lvl
        while len(levels) <= lvl:
            levels.append([])
        levels[lvl].append(w)
        q.append(w)
        ledger.charge("vertex_charge")
        ledger.charge("queue_op")

    # the virtual super-source sits at level 0 and is never stored
    for v in range(n):
        if side[v] == SIDE_A and mate[v] < 0:
            discover(v, 1)
    k = math.inf
    while q:
        v = q.popleft()
        ledger.charge("queue_op")
        if level[v] > k:
            break
        if side[v] == SIDE_B:
            if mate[v] < 0:
                k = level[v]
            elif u.owner[mate[v]] == SIDE_A:
                discover(int(mate[v]), level[v] + 1)
            continue
        target = SIDE_B
        row = bp.rows[v]
        if not bp.switched[v]:
            for w in row:
                ledger.charge("pclist_element_charge")
                if u.owner[w] == target:
                    discover(w, level[v] + 1)
            continue
        for w in row:
            ledger.charge("pclist_element_charge")
            if u.owner[w] == target:
                mark[w] = True
        w = u.head[target]
        while w != NIL:
            nxt = u.nxt[w]
            if mark[w]:
                mark[w] = False
                ledger.charge("pclist_element_charge")
            else:
                discover(w, level[v] + 1)
            w = nxt
    if k == math.inf:
        return LevelPartition([[]], 0, [-1] * n)
    levels = levels[:k + 1]
    for v in range(n):
        if level[v] > k:
            level[v] = -1
    return LevelPartition(levels, int(k), level)


def dfs_star(bp: BipartitePCList, lp: LevelPartition, mate,
             ledger: WorkLedger | None = None) -> list[list[int]]:
    """Maximal set of vertex-disjoint shortest augmenting paths (A-end first)."""
    ledger = ledger if ledger is not None else WorkLedger()
    if lp.empty:
        return []
    n = bp.n
    k = lp.k
    lists = VertexLists(n, k + 1)
    for i in range(1, k + 1):
        # counting sort by label restores pc-list order within each level
        for v in sorted(lp.levels[i]):
            lists.append(i, v)
    ledger.charge("ledger_misc", n)
    level = lp.level
    paths = []
    cursors: dict[int, object] = {}

    def cursor(v):
        c = cursors.get(v)
        if c is None:
            nxt_level = level[v] + 1
            if bp.switched[v]:
                # per-phase copy of the stored list, consumed by the walk
                ledger.charge("pclist_element_charge", len(bp.rows[v]))
                c = ComplementCursor(lists, nxt_level, ElementList(bp.rows[v]), ledger)
            else:
                c = PlainCursor(lists, nxt_level, bp.rows[v], ledger)
            cursors[v] = c
        return c

    while lists.head[1] != NIL:
        root = lists.head[1]
        lists.remove(root)
        ledger.charge("vertex_charge")
        stack = [root]
        while stack:
            v = stack[-1]
            if bp.side[v] == SIDE_B:
                if mate[v] < 0:
                    # recording is paid for by the augmentation
                    paths.append(list(stack))
                    break
                w = int(mate[v])
                if lists.owner[w] == level[v] + 1:
                    lists.remove(w)
                    ledger.charge("vertex_charge")
                    stack.append(w)
                else:
                    stack.pop()
                    ledger.charge("vertex_charge")
                continue
            if level[v] + 1 > k:
                stack.pop()
                ledger.charge("vertex_charge")
                continue
            w = cursor(v).next()
            if w == NIL:
                stack.pop()
                ledger.charge("vertex_charge")
            else:
                lists.remove(w)
                ledger.charge("vertex_charge")
                stack.append(w)
    return paths


def augment(mate, paths, ledger: WorkLedger | None = None) -> None:
    """Flip each path a0 b0 a1 b1 ... so that (a_i, b_i) become matched."""
    for path in paths:
        for i in range(0, len(path), 2):
            a, b = path[i], path[i + 1]
            mate[a] = b
            mate[b] = a
        if ledger is not None:
            ledger.charge("ledger_misc", len(path))


def hopcroft_karp(bp: BipartitePCList, ledger: WorkLedger | None = None) -> Matching:
    """Maximum matching; phases repeat until a phase finds no augmenting path."""
    mate = np.full(bp.n, -1, dtype=np.int64)
    result = Matching(mate)
    while True:
        phase = WorkLedger()
        lp = bfs_star(bp, mate, phase)
        paths = dfs_star(bp, lp, mate, phase)
        augment(mate, paths, phase)
        result.phases += 1
        result.phase_ledgers.append(phase)
        result.path_lengths.append([len(p) - 1 for p in paths])
        if ledger is not None:
            ledger.merge(phase)
        if not paths:
            return result


def maximum_bipartite_matching(g: Graph, side=None, ledger: WorkLedger | None = None) -> Matching:
    return hopcroft_karp(build_bipartite_representative(g, side), ledger)
