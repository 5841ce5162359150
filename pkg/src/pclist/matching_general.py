"""Maximum cardinality matching on general graphs over out-mode pc-lists.

Each phase grows depth-first alternating trees from the free vertices in
label order.  Grow steps walk the undiscovered list U with the plain or
complement cursor.  Once a vertex has no grow step left it looks for outer
vertices of its own tree that became outer after its blossom did: an
unswitched vertex checks its stored neighbours, a switched vertex walks
the OUT list and probes members through its adjacency lookup vector.
Every probe that misses is a stored non-neighbour, so the walk costs
O(|N~(x)|) plus one step per absorbed blossom.

Blossoms are tracked with union-find and expanded after the augmentation
at the end of each phase, so no dual variables are kept and phases simply
repeat until one finds no augmenting path.
"""

from __future__ import annotations

import numpy as np

from .dllist import NIL, ComplementCursor, ElementList, PlainCursor, VertexLists
from .graph_core import Graph
from .ledger import WorkLedger
from .matching_bipartite import Matching, augment
from .pclist_core import ModeError, PCList, build_out_representative

UNLABELED, OUTER, INNER = 0, 1, 2
GROW, BRIDGE, ROOT = 0, 1, 2


def lookup_vectors(p: PCList) -> dict[int, np.ndarray]:
    """Adjacency row for every switched vertex: all ones, minus N~(v) and v."""
    out = {}
    for v in np.flatnonzero(p.out_bits).tolist():
        row = np.ones(p.n, dtype=bool)
        row[p.stored(v)] = False
        row[v] = False
        out[v] = row
    return out


class OutList:
    """Outer blossoms in the order they became outer.

    Entries are never moved; removal marks an entry dead and a skip
    structure finds the next live entry.
    """

    def __init__(self):
        self.root: list[int] = []     # union-find root owning the entry
        self._skip: list[int] = []

    def __len__(self):
        return len(self.root)

    def append(self, r: int) -> int:
        self.root.append(r)
        self._skip.append(len(self._skip))
        return len(self.root) - 1

    def remove(self, e: int) -> None:
        self._skip[e] = e + 1

    def alive(self, e: int) -> bool:
        return self._skip[e] == e

    def next_alive(self, e: int) -> int:
        """Smallest live entry index >= e, or len(self)."""
        skip = self._skip
        top = e
        while top < len(skip) and skip[top] != top:
            top = skip[top]
        while e < len(skip) and skip[e] != e:
            skip[e], e = top, skip[e]
        return top

    def entries(self) -> list[int]:
        return [e for e in range(len(self.root)) if self.alive(e)]


class BlossomForest:
    """Union-find over vertices; each root carries base, members and OUT entry."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.base = list(range(n))
        self.members = [[v] for v in range(n)]
        self.entry = [-1] * n

    def find(self, v: int) -> int:
        root = v
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[v] != root:
            self.parent[v], v = root, self.parent[v]
        return root

    def union_into(self, keep: int, other: int) -> None:
        """Merge root ``other`` into root ``keep``; keep's base and entry survive."""
        if len(self.members[other]) > len(self.members[keep]):
            self.parent[keep] = other
            self.members[other].extend(self.members[keep])
            self.members[keep] = []
            self.base[other] = self.base[keep]
            self.entry[other] = self.entry[keep]
            return
        self.parent[other] = keep
        self.members[keep].extend(self.members[other])
        self.members[other] = []

    def blossoms(self) -> list[list[int]]:
        return [sorted(self.members[r]) for r in range(len(self.parent))
                if self.parent[r] == r and len(self.members[r]) > 1]


class SearchState:
    """Mutable structures of one find_ap_set call."""

    def __init__(self, p: PCList, mate, lookup: dict[int, np.ndarray] | None = None,
                 ledger: WorkLedger | None = None):
        if p.mode != "out":
            raise ModeError("general matching runs on out-mode pc-lists")
        self.p = p
        self.n = n = p.n
        self.mate = mate
        self.lookup = lookup if lookup is not None else lookup_vectors(p)
        self.ledger = ledger if ledger is not None else WorkLedger()
        self.label = [UNLABELED] * n
        self.kind = [ROOT] * n
        self.grow_parent = [-1] * n
        self.bridge: list[tuple[int, int] | None] = [None] * n
        self.tree = [-1] * n
        self.forest = BlossomForest(n)
        self.out = OutList()
        self.aux: dict[int, list[int]] = {}   # N~'(x): misses in OUT order
        self.grow_done = [False] * n
        self.paths: list[list[int]] = []
        self.blossom_steps = 0
        self.u = VertexLists(n, 1)
        for v in range(n):
            self.u.append(0, v)
        self.ledger.charge("ledger_misc", n)
        self._tree_vertices: list[int] = []
        self._current = -1

    # labelling helpers

    def _make_outer(self, v: int, kind: int) -> None:
        self.label[v] = OUTER
        self.kind[v] = kind
        self.tree[v] = self._current
        self._tree_vertices.append(v)
        r = self.forest.find(v)
        if self.forest.entry[r] < 0:
            self.forest.entry[r] = self.out.append(r)
        self.ledger.charge("vertex_charge")

    def start_root(self, r: int) -> bool:
        """Search from free vertex r; True if an augmenting path was recorded."""
        if self.mate[r] >= 0 or self.u.owner[r] != 0:
            raise ValueError(f"vertex {r} is not an unlabeled free vertex")
        self._current = r
        self._tree_vertices = []
        self.u.remove(r)
        self._make_outer(r, ROOT)
        found = self.find_ap(r)
        for v in self._tree_vertices:
            # the tree is finished either way; nothing can reach it again
            r_v = self.forest.find(v)
            e = self.forest.entry[r_v]
            if e >= 0 and self.out.alive(e):
                self.out.remove(e)
        return found

    def path_to(self, v: int, w: int) -> list[int]:
        """Even alternating path from outer v up to its ancestor w."""
        out = []
        # grow steps iterate; only bridges recurse
        while v != w:
            if self.kind[v] == GROW:
                m = int(self.mate[v])
                out += [v, m]
                v = self.grow_parent[m]
            elif self.kind[v] == BRIDGE:
                s, t = self.bridge[v]
                out.append(v)
                out += self.path_to(s, int(self.mate[v]))[::-1]
                v = t
            else:
                raise RuntimeError(f"walked past the root looking for {w}")
        out.append(w)
        return out

    def _cursor(self, x: int):
        row = self.p.stored(x)
        if self.p.out_bits[x]:
            self.ledger.charge("pclist_element_charge", len(row))
            return ComplementCursor(self.u, 0, ElementList(row.tolist()), self.ledger)
        return PlainCursor(self.u, 0, row.tolist(), self.ledger)

    def _blossom(self, x: int, y: int) -> list[int]:
        """Blossom step on outer x, y with b(y) below b(x); returns new outer vertices, top first."""
        f = self.forest
        bx = f.find(x)
        path = []
        b = f.find(y)
        while b != bx:
            base = f.base[b]
            m = int(self.mate[base])
            if m < 0:
                raise RuntimeError(f"blossom of {x} is not an ancestor of the blossom of {y}")
            path.append((b, m))
            b = f.find(self.grow_parent[m])
            self.ledger.charge("vertex_charge")
        self.blossom_steps += 1
        fresh = []
        for b, m in path:
            if __debug__:
                for z in f.members[b]:
                    assert self.grow_done[z], "blossom absorbed before its scan finished"
            self.out.remove(f.entry[b])
            root = f.find(bx)
            f.union_into(root, b)
            f.union_into(f.find(bx), m)
            self.bridge[m] = (y, x)
            self.label[m] = OUTER
            self.kind[m] = BRIDGE
            fresh.append(m)
        fresh.reverse()
        return fresh

    def find_ap(self, x: int) -> bool:
        """Grow and blossom steps from outer x, depth first; True once a path is found."""
        if self.label[x] != OUTER:
            raise ValueError(f"find_ap needs an outer vertex, got {x}")
        charge = self.ledger.charge
        f = self.forest
        lookup = self.lookup
        # frame: [vertex, stage, cursor-or-position]
        stack = [[x, 0, None]]
        charge("queue_op")
        while stack:
            frame = stack[-1]
            v, stage = frame[0], frame[1]
            if stage == 0:
                if frame[2] is None:
                    frame[2] = self._cursor(v)
                y = frame[2].next()
                if y == NIL:
                    frame[1] = 1
                    frame[2] = 0
                    self.grow_done[v] = True
                    continue
                self.u.remove(y)
                charge("vertex_charge")
                if self.mate[y] < 0:
                    self.grow_parent[y] = v
                    self.tree[y] = self._current
                    self._tree_vertices.append(y)
                    self.label[y] = INNER
                    self.paths.append(self.path_to(v, self._current)[::-1] + [y])
                    charge("ledger_misc", len(self.paths[-1]))
                    return True
                self.label[y] = INNER
                self.tree[y] = self._current
                self._tree_vertices.append(y)
                self.grow_parent[y] = v
                z = int(self.mate[y])
                self.u.remove(z)
                self._make_outer(z, GROW)
                stack.append([z, 0, None])
                charge("queue_op")
                continue
            bv = f.find(v)
            ev = f.entry[bv]
            hit = -1
            if not self.p.out_bits[v]:
                row = self.p.stored(v)
                pos = frame[2]
                while pos < len(row):
                    y = int(row[pos])
                    pos += 1
                    charge("pclist_element_charge")
                    if (self.label[y] == OUTER and self.tree[y] == self._current
                            and f.entry[f.find(y)] > ev):
                        hit = y
                        break
                frame[2] = pos
            else:
                vec = lookup[v]
                aux = self.aux.setdefault(v, [])
                e = self.out.next_alive(max(frame[2], ev + 1))
                while e < len(self.out):
                    members = f.members[f.find(self.out.root[e])]
                    for y in members:
                        if vec[y]:
                            hit = y
                            break
                        # a miss is a stored non-neighbour of v
                        aux.append(y)
                        charge("pclist_element_charge")
                    if hit >= 0:
                        break
                    charge("ledger_misc")
                    e = self.out.next_alive(e + 1)
                frame[2] = e + 1 if hit >= 0 else e
            if hit < 0:
                stack.pop()
                charge("queue_op")
                continue
            for m in self._blossom(v, hit):
                stack.append([m, 0, None])
                charge("queue_op")
        return False


def find_ap_set(p: PCList, mate, ledger: WorkLedger | None = None,
                lookup: dict[int, np.ndarray] | None = None) -> tuple[list[list[int]], list[list[int]]]:
    """Vertex-disjoint augmenting paths (root end first) and the blossoms formed."""
    state = SearchState(p, mate, lookup, ledger)
    for r in range(p.n):
        if mate[r] < 0 and state.u.owner[r] == 0:
            state.start_root(r)
    return state.paths, state.forest.blossoms()


def maximum_matching(g: Graph, ledger: WorkLedger | None = None) -> Matching:
    """Maximum cardinality matching of an undirected graph."""
    if g.directed:
        raise ValueError("maximum_matching needs an undirected graph")
    p = build_out_representative(g)
    return maximum_matching_pclist(p, ledger)


def maximum_matching_pclist(p: PCList, ledger: WorkLedger | None = None) -> Matching:
    if p.directed:
        raise ValueError("maximum_matching needs an undirected pc-list")
    lookup = lookup_vectors(p)
    mate = np.full(p.n, -1, dtype=np.int64)
    result = Matching(mate)
    while True:
        phase = WorkLedger()
        paths, _ = find_ap_set(p, mate, phase, lookup)
        augment(mate, paths, phase)
        result.phases += 1
        result.phase_ledgers.append(phase)
        result.path_lengths.append([len(q) - 1 for q in paths])
        if ledger is not None:
            ledger.merge(phase)
        if not paths:
            return result
