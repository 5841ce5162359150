"""Reference implementations used to check the pc-list algorithms.

Everything here works on dense adjacency matrices or plain adjacency lists
and imports nothing from the pc-list modules.
"""

from __future__ import annotations

from collections import deque

import numpy as np

from .graph_core import Graph, from_adjacency_matrix


class SizeError(ValueError):
    """Instance too large for an exhaustive oracle."""


def apply_switches(g: Graph, out_set=(), in_set=(), seidel_set=()) -> Graph:
    """Explicitly apply out-, in- and Seidel switches (order-independent)."""
    a = g.adjacency_matrix()
    n = g.n
    off = ~np.eye(n, dtype=bool)
    seidel = list(seidel_set)
    if seidel and g.directed:
        raise ValueError("Seidel switching needs an undirected graph")
    for v in out_set:
        a[v] ^= off[v]
    for v in in_set:
        a[:, v] ^= off[:, v]
    for v in seidel:
        a[v] ^= off[v]
        a[:, v] ^= off[:, v]
    directed = g.directed or bool(list(out_set)) or bool(list(in_set))
    return from_adjacency_matrix(a, directed=directed and not np.array_equal(a, a.T))


def _subsets(n: int) -> np.ndarray:
    """All 2^n subsets as a (2^n, n) 0/1 matrix."""
    codes = np.arange(1 << n, dtype=np.int64)
    return ((codes[:, None] >> np.arange(n)) & 1).astype(np.int64)


def brute_min_representative(g: Graph, kind: str) -> int:
    """Exact minimum arc count over the switching class by enumeration."""
    n = g.n
    a = g.adjacency_matrix().astype(np.int64)
    if kind == "gale_berlekamp":
        if n > 10:
            raise SizeError("gale_berlekamp enumeration capped at n <= 10")
    elif n > 14:
        raise SizeError("enumeration capped at n <= 14")
    if n == 0:
        return 0
    x = _subsets(n)
    if kind == "out":
        # switching row v replaces its count r by n-1-r
        r = a.sum(axis=1)
        return int((x @ (n - 1 - 2 * r) + r.sum()).min())
    if kind == "in":
        c = a.sum(axis=0)
        return int((x @ (n - 1 - 2 * c) + c.sum()).min())
    if kind == "seidel":
        if g.directed:
            raise ValueError("Seidel switching needs an undirected graph")
        # arcs across the cut (S, V-S) are complemented, others kept
        across = (x @ a * (1 - x)).sum(axis=1)
        size = x.sum(axis=1)
        pairs = size * (n - size)
        return int((a.sum() - 2 * across + 2 * (pairs - across)).min())
    if kind == "gale_berlekamp":
        off = 1 - np.eye(n, dtype=np.int64)
        best = None
        for o in x:
            b = (a ^ o[:, None]) * off
            c = b.sum(axis=0)
            totals = x @ (n - 1 - 2 * c) + c.sum()
            low = int(totals.min())
            best = low if best is None else min(best, low)
        return best
    raise ValueError(f"unknown switching kind {kind!r}")


def _lists(g: Graph) -> list[list[int]]:
    return [[int(u) for u in g.indices[g.indptr[v]:g.indptr[v + 1]]] for v in range(g.n)]


def baseline_bfs(g: Graph, source: int) -> list[int]:
    """Distances from ``source``; -1 for unreachable."""
    adj = _lists(g)
    dist = [-1] * g.n
    dist[source] = 0
    q = deque([source])
    while q:
        v = q.popleft()
        for u in adj[v]:
            if dist[u] < 0:
                dist[u] = dist[v] + 1
                q.append(u)
    return dist


def baseline_reachable(g: Graph, source: int) -> set[int]:
    return {v for v, d in enumerate(baseline_bfs(g, source)) if d >= 0}


def is_valid_dfs(g: Graph, order: list[int], parent) -> bool:
    """Check that ``order``/``parent`` could be produced by some DFS from order[0]."""
    if not order:
        return False
    a = g.adjacency_matrix()
    seen = np.zeros(g.n, dtype=bool)
    seen[order[0]] = True
    stack = [order[0]]
    for w in order[1:]:
        if seen[w]:
            return False
        while stack and not np.any(a[stack[-1]] & ~seen):
            stack.pop()
        if not stack or parent[w] != stack[-1] or not a[stack[-1], w]:
            return False
        seen[w] = True
        stack.append(w)
    # the search may only stop once nothing reachable is left
    while stack:
        if np.any(a[stack[-1]] & ~seen):
            return False
        stack.pop()
    return True


def floyd_warshall(g: Graph) -> np.ndarray:
    """All-pairs hop distances; ``np.inf`` where unreachable."""
    n = g.n
    d = np.full((n, n), np.inf)
    d[g.adjacency_matrix()] = 1
    np.fill_diagonal(d, 0)
    for k in range(n):
        d = np.minimum(d, d[:, k:k + 1] + d[k:k + 1, :])
    return d


def diameter_fw(g: Graph) -> float:
    d = floyd_warshall(g)
    return float(d.max()) if g.n else 0.0


def transitive_closure_fw(g: Graph) -> np.ndarray:
    return np.isfinite(floyd_warshall(g))


def contract_explicit(g: Graph, beta) -> tuple[Graph, list[int]]:
    """Simple contraction of disjoint sets; new ids ordered by smallest member."""
    n = g.n
    group = list(range(n))
    for block in beta:
        block = sorted(block)
        for v in block:
            group[v] = block[0]
    reps = sorted(set(group))
    new_id = {r: i for i, r in enumerate(reps)}
    mapping = [new_id[group[v]] for v in range(n)]
    k = len(reps)
    a = np.zeros((k, k), dtype=bool)
    for u, v in g.arcs():
        a[mapping[u], mapping[v]] = True
    np.fill_diagonal(a, False)
    src, dst = np.nonzero(a)
    indptr = np.zeros(k + 1, dtype=np.int64)
    np.cumsum(np.bincount(src, minlength=k), out=indptr[1:])
    return Graph(k, indptr, dst.astype(np.int64), g.directed), mapping


def max_matching_bruteforce(g: Graph) -> int:
    """Maximum matching size by exhaustive search over edge subsets (n <= 12)."""
    if g.n > 12:
        raise SizeError("brute-force matching capped at n <= 12")
    edges = sorted({(min(u, v), max(u, v)) for u, v in g.arcs()})

    best = 0

    def extend(i, used, size):
        nonlocal best
        if size + (g.n - bin(used).count("1")) // 2 <= best:
            return
        best = max(best, size)
        for j in range(i, len(edges)):
            u, v = edges[j]
            bit = (1 << u) | (1 << v)
            if not used & bit:
                extend(j + 1, used | bit, size + 1)

    extend(0, 0, 0)
    return best


def bipartite_matching_bruteforce(g: Graph, side) -> int:
    """Exhaustive subset DP over the smaller side (at most 12 vertices there)."""
    a = [v for v in range(g.n) if side[v] == 0]
    b = [v for v in range(g.n) if side[v] == 1]
    if len(b) > len(a):
        a, b = b, a
    if len(b) > 12:
        raise SizeError("bipartite brute force capped at 12 on the smaller side")
    pos = {v: i for i, v in enumerate(b)}
    adj = _lists(g)
    # best[mask]: largest matching of the processed a-vertices into mask
    best = {0: 0}
    for v in a:
        nxt = dict(best)
        for mask, size in best.items():
            for u in adj[v]:
                bit = 1 << pos[u]
                if not mask & bit and nxt.get(mask | bit, -1) < size + 1:
                    nxt[mask | bit] = size + 1
        best = nxt
    return max(best.values())


def bipartite_matching_kuhn(g: Graph, side) -> int:
    """Maximum bipartite matching size by simple augmenting paths (O(n m))."""
    adj = _lists(g)
    mate = [-1] * g.n

    def try_kuhn(a, seen):
        for b in adj[a]:
            if b in seen:
                continue
            seen.add(b)
            if mate[b] < 0 or try_kuhn(mate[b], seen):
                mate[b] = a
                mate[a] = b
                return True
        return False

    size = 0
    for a in range(g.n):
        if side[a] == 0 and mate[a] < 0 and try_kuhn(a, set()):
            size += 1
    return size


def edmonds(g: Graph) -> list[int]:
    """Maximum cardinality matching by Edmonds' blossom algorithm (BFS, O(n^3)).

    Returns the mate array (-1 for unmatched).
    """
    n = g.n
    adj = _lists(g)
    mate = [-1] * n

    def find_path(root):
        used = [False] * n
        parent = [-1] * n
        base = list(range(n))
        used[root] = True
        q = deque([root])

        def lca(a, b):
            seen = [False] * n
            while True:
                a = base[a]
                seen[a] = True
                if mate[a] == -1:
                    break
                a = parent[mate[a]]
            while True:
                b = base[b]
                if seen[b]:
                    return b
                b = parent[mate[b]]

        def mark_path(v, b, child, blossom):
            while base[v] != b:
                blossom[base[v]] = blossom[base[mate[v]]] = True
                parent[v] = child
                child = mate[v]
                v = parent[mate[v]]

        while q:
            v = q.popleft()
            for u in adj[v]:
                if base[v] == base[u] or mate[v] == u:
                    continue
                if u == root or (mate[u] != -1 and parent[mate[u]] != -1):
                    cur = lca(v, u)
                    blossom = [False] * n
                    mark_path(v, cur, u, blossom)
                    mark_path(u, cur, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                q.append(i)
                elif parent[u] == -1:
                    parent[u] = v
                    if mate[u] == -1:
                        return u, parent
                    used[mate[u]] = True
                    q.append(mate[u])
        return -1, parent

    for root in range(n):
        if mate[root] != -1:
            continue
        end, parent = find_path(root)
        while end != -1:
            pv = parent[end]
            ppv = mate[pv]
            mate[end] = pv
            mate[pv] = end
            end = ppv
    return mate


def matching_size(mate) -> int:
    return sum(1 for v, u in enumerate(mate) if u > v)

