"""Partially complemented adjacency lists and representative construction.

All builders store lists in *internal* labels.  Out, in and Gale-Berlekamp
representatives use the identity labelling; Seidel representatives relabel
so that unswitched vertices come first, which makes every stored list split
into a low block and a high block separated by a dummy cursor.

A stored entry ``u`` in the list of ``v`` denotes the arc ``v -> u`` of the
represented graph iff ``out_bits[v] == in_bits[u]``; equivalently the arc is
present iff ``stored xor out_bits[v] xor in_bits[u]``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph_core import Graph, from_arcs


class ModeError(ValueError):
    """Operation not defined for this representation mode or graph kind."""


MODES = ("out", "in", "seidel", "gale_berlekamp")


@dataclass(eq=False)
class PCList:
    n: int
    mode: str
    out_bits: np.ndarray   # uint8[n], internal labels
    in_bits: np.ndarray    # uint8[n], internal labels; contiguous classes in seidel mode
    indptr: np.ndarray     # int64[n+1]
    indices: np.ndarray    # int64[m_tilde], sorted per row, internal labels
    split: np.ndarray      # int64[n], dummy position: first entry of the high block
    n_low: int             # internal labels < n_low form the low block
    to_internal: np.ndarray
    to_original: np.ndarray
    directed: bool = False

    @property
    def m_tilde(self) -> int:
        return int(self.indices.shape[0])

    @property
    def switched(self) -> np.ndarray:
        """Switch flags indexed by original label."""
        return self.out_bits[self.to_internal].astype(bool)

    def stored(self, v: int) -> np.ndarray:
        """Stored list of internal vertex ``v`` (internal labels)."""
        return self.indices[self.indptr[v]:self.indptr[v + 1]]

    def stored_original(self, v: int) -> list[int]:
        """Stored list of original vertex ``v`` mapped to original labels, sorted."""
        w = self.to_internal[v]
        return sorted(int(x) for x in self.to_original[self.stored(w)])

    def copy(self) -> "PCList":
        return PCList(self.n, self.mode, self.out_bits.copy(), self.in_bits.copy(),
                      self.indptr.copy(), self.indices.copy(), self.split.copy(),
                      self.n_low, self.to_internal.copy(), self.to_original.copy(),
                      self.directed)

    def traversable(self) -> bool:
        return self.mode in ("out", "seidel")

    def __repr__(self):
        return (f"PCList(n={self.n}, mode={self.mode!r}, m_tilde={self.m_tilde}, "
                f"switched={int(self.out_bits.sum())})")


def _identity(n):
    return np.arange(n, dtype=np.int64)


def _csr(n: int, rows: list[np.ndarray]) -> tuple[np.ndarray, np.ndarray]:
    indptr = np.zeros(n + 1, dtype=np.int64)
    indptr[1:] = np.cumsum([len(r) for r in rows]) if n else []
    indices = np.concatenate(rows).astype(np.int64) if rows else np.empty(0, np.int64)
    return indptr, indices


def _complement_row(n: int, v: int, row: np.ndarray) -> np.ndarray:
    keep = np.ones(n, dtype=bool)
    keep[row] = False
    keep[v] = False
    return np.flatnonzero(keep)


def from_rows(n: int, mode: str, out_bits, in_bits, rows: list[np.ndarray],
              directed: bool = False) -> PCList:
    """Assemble an identity-labelled pc-list from sorted rows."""
    indptr, indices = _csr(n, rows)
    return PCList(n, mode, np.asarray(out_bits, dtype=np.uint8),
                  np.asarray(in_bits, dtype=np.uint8), indptr, indices,
                  indptr[1:].copy(), n, _identity(n), _identity(n), directed)


def build_out_representative(g: Graph) -> PCList:
    """Minimum out-switching representative.

    v is switched iff that shortens its list, i.e. 2 * out-degree(v) > n - 1
    (equivalently out-degree(v) >= n/2).  Rows are independent, so the
    per-row choice is optimal for the whole class.
    """
    n = g.n
    deg = g.out_degrees()
    out_bits = (2 * deg > n - 1).astype(np.uint8)
    rows = []
    for v in range(n):
        row = g.neighbors(v)
        rows.append(_complement_row(n, v, row) if out_bits[v] else np.array(row))
    return from_rows(n, "out", out_bits, np.zeros(n, np.uint8), rows, g.directed)


def build_plain(g: Graph) -> PCList:
    """Pc-list with no switches, i.e. the ordinary adjacency list."""
    n = g.n
    rows = [np.array(g.neighbors(v)) for v in range(n)]
    return from_rows(n, "out", np.zeros(n, np.uint8), np.zeros(n, np.uint8), rows, g.directed)


def build_in_representative(g: Graph) -> PCList:
    """Minimum in-switching representative: switch v iff 2 * in-degree(v) > n - 1."""
    n = g.n
    in_bits = (2 * g.in_degrees() > n - 1).astype(np.uint8)
    flipped = np.flatnonzero(in_bits)
    rows = []
    for u in range(n):
        row = g.neighbors(u)
        mask = np.zeros(n, dtype=bool)
        mask[row] = True
        mask[flipped] ^= True
        mask[u] = False
        rows.append(np.flatnonzero(mask))
    return from_rows(n, "in", np.zeros(n, np.uint8), in_bits, rows, g.directed)


def build_seidel_pclist(g: Graph, s) -> PCList:
    """Pc-list of the Seidel switch of ``g`` on ``s`` with dummy separators.

    Switched v stores its neighbours inside S and its non-neighbours in V-S;
    unswitched v stores its neighbours in V-S and its non-neighbours in S.
    Vertices are relabelled so that V-S precedes S, lists are sorted under
    the new labels, and ``split[v]`` marks the block boundary.
    """
    if g.directed:
        raise ModeError("Seidel switching needs an undirected graph")
    n = g.n
    in_s = np.zeros(n, dtype=bool)
    members = np.fromiter((int(x) for x in s), dtype=np.int64)
    if members.size and (members.min() < 0 or members.max() >= n):
        raise ValueError("switch set vertex out of range")
    in_s[members] = True
    # stable relabel: V-S first, then S, each in original order
    to_original = np.concatenate([np.flatnonzero(~in_s), np.flatnonzero(in_s)]).astype(np.int64)
    to_internal = np.empty(n, dtype=np.int64)
    to_internal[to_original] = np.arange(n)
    n_low = int(n - in_s.sum())
    bits = in_s[to_original].astype(np.uint8)

    rows = []
    split = np.empty(n, dtype=np.int64)
    offset = 0
    for w in range(n):
        v = to_original[w]
        nbr = np.zeros(n, dtype=bool)
        nbr[g.neighbors(v)] = True
        # stored iff neighbour xor (target class differs from v's class)
        stored = nbr ^ (in_s != in_s[v])
        stored[v] = False
        row = np.sort(to_internal[np.flatnonzero(stored)])
        rows.append(row)
        split[w] = offset + int(np.searchsorted(row, n_low))
        offset += len(row)
    indptr, indices = _csr(n, rows)
    return PCList(n, "seidel", bits.copy(), bits.copy(), indptr, indices, split,
                  n_low, to_internal, to_original, False)


def greedy_gale_berlekamp(g: Graph) -> PCList:
    """Mixed in/out representative by strict-improvement local search.

    Applies any single in- or out-switch that lowers the arc count until none
    does.  The result is a local minimum only.
    """
    n = g.n
    a = g.adjacency_matrix()
    off = ~np.eye(n, dtype=bool)
    out_bits = np.zeros(n, dtype=np.uint8)
    in_bits = np.zeros(n, dtype=np.uint8)
    improved = True
    while improved:
        improved = False
        # an out-switch of v only changes row v, so row sums stay valid
        rows = a.sum(axis=1)
        for v in range(n):
            if 2 * rows[v] > n - 1:
                a[v] ^= off[v]
                out_bits[v] ^= 1
                improved = True
        cols = a.sum(axis=0)
        for v in range(n):
            if 2 * cols[v] > n - 1:
                a[:, v] ^= off[:, v]
                in_bits[v] ^= 1
                improved = True
    rows = [np.flatnonzero(a[v]) for v in range(n)]
    return from_rows(n, "gale_berlekamp", out_bits, in_bits, rows, g.directed)


def _present_matrix(p: PCList) -> np.ndarray:
    """Represented adjacency in internal labels."""
    n = p.n
    stored = np.zeros((n, n), dtype=bool)
    src = np.repeat(np.arange(n), np.diff(p.indptr))
    stored[src, p.indices] = True
    present = stored ^ (p.out_bits[:, None] != p.in_bits[None, :])
    np.fill_diagonal(present, False)
    return present


def represented_graph(p: PCList) -> Graph:
    """Explicitly decode the graph a pc-list stands for (Theta(n^2))."""
    present = _present_matrix(p)
    src, dst = np.nonzero(present)
    arcs = zip(p.to_original[src].tolist(), p.to_original[dst].tolist())
    return _with_direction(from_arcs(p.n, arcs, directed=True), p.directed)


def stored_graph(p: PCList) -> Graph:
    """The switched member of the class whose arcs the lists actually hold."""
    src = np.repeat(np.arange(p.n), np.diff(p.indptr))
    arcs = zip(p.to_original[src].tolist(), p.to_original[p.indices].tolist())
    return _with_direction(from_arcs(p.n, arcs, directed=True), p.directed)


def _with_direction(g: Graph, directed: bool) -> Graph:
    return Graph(g.n, g.indptr.copy(), g.indices.copy(), directed)
