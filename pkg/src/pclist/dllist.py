"""Array-backed doubly-linked lists for the matching algorithms."""

from __future__ import annotations

from .ledger import WorkLedger

NIL = -1


class VertexLists:
    """A family of disjoint ordered lists over vertex ids ``0..n-1``.

    Each vertex sits in at most one list; ``owner[v]`` names it (or NIL),
    giving O(1) membership, removal and neighbour access.
    """

    def __init__(self, n: int, count: int):
        self.nxt = [NIL] * n
        self.prv = [NIL] * n
        self.owner = [NIL] * n
        self.head = [NIL] * count
        self.tail = [NIL] * count

    def append(self, lst: int, v: int) -> None:
        t = self.tail[lst]
        self.prv[v] = t
        self.nxt[v] = NIL
        if t == NIL:
            self.head[lst] = v
        else:
            self.nxt[t] = v
        self.tail[lst] = v
        self.owner[v] = lst

    def remove(self, v: int) -> None:
        lst = self.owner[v]
        p, q = self.prv[v], self.nxt[v]
        if p == NIL:
            self.head[lst] = q
        else:
            self.nxt[p] = q
        if q == NIL:
            self.tail[lst] = p
        else:
            self.prv[q] = p
        self.owner[v] = NIL

    def items(self, lst: int) -> list[int]:
        out = []
        v = self.head[lst]
        while v != NIL:
            out.append(v)
            v = self.nxt[v]
        return out


class ElementList:
    """Doubly-linked copy of one stored neighbour list, addressed by position."""

    __slots__ = ("label", "nxt", "prv", "head", "tail")

    def __init__(self, labels):
        self.label = list(labels)
        k = len(self.label)
        self.nxt = list(range(1, k)) + [NIL] if k else []
        self.prv = [NIL] + list(range(k - 1)) if k else []
        self.head = 0 if k else NIL
        self.tail = k - 1 if k else NIL

    def remove(self, i: int) -> None:
        p, q = self.prv[i], self.nxt[i]
        if p == NIL:
            self.head = q
        else:
            self.nxt[p] = q
        if q == NIL:
            self.tail = p
        else:
            self.prv[q] = p


class ComplementCursor:
    """Enumerate ``U - stored`` for a switched vertex, in ascending order.

    ``U`` is list ``lst`` of a :class:`VertexLists`; ``stored`` is the
    vertex's non-neighbour list.  Both are sorted.  Between calls the caller
    may shrink U arbitrarily (recursive discovery); the next call first runs
    the restart step, walking back over stored entries that have left U.
    Every comparison is charged to a stored entry or to the vertex returned.
    """

    __slots__ = ("u", "lst", "stored", "ledger", "ucur", "ncur", "started", "pending")

    def __init__(self, u: VertexLists, lst: int, stored: ElementList, ledger: WorkLedger):
        self.u = u
        self.lst = lst
        self.stored = stored
        self.ledger = ledger
        self.ucur = NIL
        self.ncur = stored.head
        self.started = False
        self.pending = False

    def next(self) -> int:
        u, st, lst = self.u, self.stored, self.lst
        charge = self.ledger.charge
        if self.pending:
            self.pending = False
            w = st.prv[self.ncur] if self.ncur != NIL else st.tail
            while w != NIL and u.owner[st.label[w]] != lst:
                t = w
                w = st.prv[t]
                st.remove(t)
                charge("pclist_element_charge")
            ucur = u.head[lst] if w == NIL else u.nxt[st.label[w]]
        elif not self.started:
            self.started = True
            ucur = u.head[lst]
        else:
            ucur = self.ucur
        ncur = self.ncur
        while ucur != NIL:
            if ncur != NIL and st.label[ncur] == ucur:
                charge("pclist_element_charge")
                ucur = u.nxt[ucur]
                ncur = st.nxt[ncur]
            elif ncur != NIL and ucur > st.label[ncur]:
                t = ncur
                ncur = st.nxt[ncur]
                st.remove(t)
                charge("pclist_element_charge")
            else:
                self.ucur, self.ncur = ucur, ncur
                self.pending = True
                return ucur
        self.ucur, self.ncur = NIL, ncur
        return NIL


class PlainCursor:
    """Enumerate the stored neighbours of an unswitched vertex that are still in U."""

    __slots__ = ("u", "lst", "row", "pos", "ledger")

    def __init__(self, u: VertexLists, lst: int, row: list[int], ledger: WorkLedger):
        self.u = u
        self.lst = lst
        self.row = row
        self.pos = 0
        self.ledger = ledger

    def next(self) -> int:
        row, owner, lst = self.row, self.u.owner, self.lst
        while self.pos < len(row):
            w = row[self.pos]
            self.pos += 1
            self.ledger.charge("pclist_element_charge")
            if owner[w] == lst:
                return w
        return NIL
