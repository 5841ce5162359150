"""Plain CSR graphs, instance generators and degree statistics."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np


class ParameterError(ValueError):
    """Invalid generator or graph parameters."""


@dataclass(frozen=True, eq=False)
class Graph:
    """Simple digraph stored as CSR arrays with strictly increasing rows.

    Undirected graphs are stored as symmetric digraphs (``directed=False``),
    so ``m`` always counts arcs.
    """

    n: int
    indptr: np.ndarray
    indices: np.ndarray
    directed: bool = False

    def __post_init__(self):
        self.indptr.setflags(write=False)
        self.indices.setflags(write=False)

    @property
    def m(self) -> int:
        return int(self.indices.shape[0])

    def neighbors(self, v: int) -> np.ndarray:
        return self.indices[self.indptr[v]:self.indptr[v + 1]]

    def out_degrees(self) -> np.ndarray:
        return np.diff(self.indptr)

    def in_degrees(self) -> np.ndarray:
        return np.bincount(self.indices, minlength=self.n).astype(np.int64)

    def arcs(self) -> Iterable[tuple[int, int]]:
        for u in range(self.n):
            for v in self.neighbors(u):
                yield u, int(v)

    def edge_set(self) -> set[tuple[int, int]]:
        return set(self.arcs())

    def has_arc(self, u: int, v: int) -> bool:
        row = self.neighbors(u)
        i = np.searchsorted(row, v)
        return bool(i < row.shape[0] and row[i] == v)

    def is_symmetric(self) -> bool:
        src = np.repeat(np.arange(self.n), self.out_degrees())
        fwd = src * self.n + self.indices
        rev = self.indices * self.n + src
        return bool(np.array_equal(np.sort(fwd), np.sort(rev)))

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=bool)
        src = np.repeat(np.arange(self.n), self.out_degrees())
        a[src, self.indices] = True
        return a

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.n == other.n and self.directed == other.directed
                and np.array_equal(self.indptr, other.indptr)
                and np.array_equal(self.indices, other.indices))

    def __repr__(self):
        kind = "directed" if self.directed else "undirected"
        return f"Graph(n={self.n}, m={self.m}, {kind})"


def from_arcs(n: int, arcs: Iterable[tuple[int, int]], directed: bool = True) -> Graph:
    """Build a graph from (u, v) pairs; duplicates are merged, self-loops rejected.

    With ``directed=False`` every pair is added in both directions.
    """
    if n < 0:
        raise ParameterError("n must be non-negative")
    pairs = np.array(list(arcs), dtype=np.int64).reshape(-1, 2)
    if pairs.size:
        if pairs.min() < 0 or pairs.max() >= n:
            raise ParameterError("vertex id out of range")
        if np.any(pairs[:, 0] == pairs[:, 1]):
            raise ParameterError("self-loops are not allowed")
        if not directed:
            pairs = np.concatenate([pairs, pairs[:, ::-1]])
    return _from_pair_array(n, pairs, directed)


def _from_pair_array(n: int, pairs: np.ndarray, directed: bool) -> Graph:
    keys = np.unique(pairs[:, 0] * max(n, 1) + pairs[:, 1]) if pairs.size else np.empty(0, np.int64)
    src = keys // max(n, 1)
    dst = keys % max(n, 1)
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(np.bincount(src, minlength=n), out=indptr[1:])
    return Graph(n, indptr, dst.astype(np.int64), directed)


def from_adjacency_matrix(a: np.ndarray, directed: bool | None = None) -> Graph:
    a = np.asarray(a, dtype=bool).copy()
    np.fill_diagonal(a, False)
    n = a.shape[0]
    if directed is None:
        directed = not np.array_equal(a, a.T)
    src, dst = np.nonzero(a)
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(np.bincount(src, minlength=n), out=indptr[1:])
    return Graph(n, indptr, dst.astype(np.int64), directed)


def empty_graph(n: int, directed: bool = False) -> Graph:
    return Graph(n, np.zeros(n + 1, dtype=np.int64), np.empty(0, np.int64), directed)


def complete_graph(n: int) -> Graph:
    return complement(empty_graph(n))


def path_graph(n: int, directed: bool = False) -> Graph:
    return from_arcs(n, [(i, i + 1) for i in range(n - 1)], directed=directed)


def cycle_graph(n: int) -> Graph:
    return from_arcs(n, [(i, (i + 1) % n) for i in range(n)], directed=False)


def star_graph(leaves: int) -> Graph:
    return from_arcs(leaves + 1, [(0, i) for i in range(1, leaves + 1)], directed=False)


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return from_arcs(10, outer + spokes + inner, directed=False)


def complement(g: Graph) -> Graph:
    """Explicit Theta(n^2) complement; arc (u, v) present iff absent in g and u != v."""
    a = ~g.adjacency_matrix()
    np.fill_diagonal(a, False)
    return from_adjacency_matrix(a, directed=g.directed)


def degree_stats(g: Graph) -> tuple[np.ndarray, int, int, float]:
    deg = g.out_degrees()
    if g.n == 0:
        return deg, 0, 0, 0.0
    return deg, int(deg.min()), int(deg.max()), float(deg.mean())


# ---------------------------------------------------------------- generators

MODELS = ("gnp", "complement_of_sparse", "unbalanced", "bipartite_gnp",
          "bipartite_complement_matching")


@dataclass(frozen=True)
class GenSpec:
    model: str
    n: int = 0
    seed: int = 0
    p: float | None = None
    avg_degree: float | None = None
    dense_fraction: float | None = None
    a: int | None = None
    b: int | None = None
    k: int | None = None
    directed: bool = False

    def validate(self) -> None:
        if self.model not in MODELS:
            raise ParameterError(f"unknown model {self.model!r}")
        if self.model == "bipartite_complement_matching":
            if self.k is None or self.k < 1:
                raise ParameterError("k must be >= 1")
            return
        if self.model == "bipartite_gnp":
            if self.a is None or self.b is None or self.a < 0 or self.b < 0 or self.a + self.b < 1:
                raise ParameterError("bipartite sides must be non-negative with a + b >= 1")
            _check_prob(self.p)
            return
        if self.n < 1:
            raise ParameterError("n must be >= 1")
        if self.model == "gnp":
            _check_prob(self.p)
        elif self.model == "complement_of_sparse":
            if self.avg_degree is None or not 0 <= self.avg_degree <= self.n - 1:
                raise ParameterError("avg_degree must lie in [0, n-1]")
        elif self.model == "unbalanced":
            if self.dense_fraction is None or not 0 <= self.dense_fraction <= 1:
                raise ParameterError("dense_fraction must lie in [0, 1]")


def _check_prob(p):
    if p is None or not 0 <= p <= 1:
        raise ParameterError("p must lie in [0, 1]")


def generate(spec: GenSpec) -> Graph:
    """Deterministic instance for ``spec``; identical specs give identical graphs."""
    spec.validate()
    rng = np.random.default_rng(spec.seed)
    if spec.model == "gnp":
        return _gnp(spec.n, spec.p, rng, spec.directed)
    if spec.model == "complement_of_sparse":
        return complement(_sparse(spec.n, spec.avg_degree, rng))
    if spec.model == "unbalanced":
        return _unbalanced(spec.n, spec.dense_fraction, rng)
    if spec.model == "bipartite_gnp":
        return _bipartite_gnp(spec.a, spec.b, spec.p, rng)
    return bipartite_complement_matching(spec.k)


def _gnp(n: int, p: float, rng: np.random.Generator, directed: bool) -> Graph:
    a = rng.random((n, n)) < p
    if not directed:
        a = np.triu(a, 1)
        a = a | a.T
    np.fill_diagonal(a, False)
    return from_adjacency_matrix(a, directed=directed)


def _sparse(n: int, avg_degree: float, rng: np.random.Generator) -> Graph:
    total = n * (n - 1) // 2
    count = min(total, int(round(avg_degree * n / 2)))
    picks = rng.choice(total, size=count, replace=False) if count else np.empty(0, np.int64)
    iu, ju = np.triu_indices(n, 1)
    pairs = np.stack([iu[picks], ju[picks]], axis=1)
    return from_arcs(n, map(tuple, pairs), directed=False)


def _unbalanced(n: int, fraction: float, rng: np.random.Generator) -> Graph:
    dense = np.zeros(n, dtype=bool)
    dense[rng.permutation(n)[:math.ceil(fraction * n)]] = True
    prob = np.where(dense[:, None] | dense[None, :], 0.95, min(1.0, 2.0 / max(n - 1, 1)))
    a = np.triu(rng.random((n, n)) < prob, 1)
    return from_adjacency_matrix(a | a.T, directed=False)


def _bipartite_gnp(na: int, nb: int, p: float, rng: np.random.Generator) -> Graph:
    n = na + nb
    a = np.zeros((n, n), dtype=bool)
    a[:na, na:] = rng.random((na, nb)) < p
    return from_adjacency_matrix(a | a.T, directed=False)


def bipartite_complement_matching(k: int) -> Graph:
    """K_{k,k} minus a perfect matching; A = 0..k-1, B = k..2k-1, a_i misses b_i."""
    n = 2 * k
    a = np.zeros((n, n), dtype=bool)
    a[:k, k:] = True
    a[np.arange(k), k + np.arange(k)] = False
    return from_adjacency_matrix(a | a.T, directed=False)
