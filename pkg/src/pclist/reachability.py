"""Diameter, eccentricities and transitive closure by one pc-list BFS per source."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .ledger import WorkLedger
from .pclist_core import PCList
from .traversal import _check, bfs_levels


@dataclass
class ReachMatrix:
    """Reflexive reachability: ``bits[u, v]`` iff v is reachable from u (original labels)."""

    n: int
    bits: np.ndarray

    def popcount(self) -> int:
        return int(self.bits.sum())

    def is_transitively_closed(self) -> bool:
        b = self.bits.astype(np.int64)
        return bool(np.array_equal((b @ b) > 0, self.bits))

    def row(self, u: int) -> set[int]:
        return set(np.flatnonzero(self.bits[u]).tolist())


@dataclass
class Diameter:
    """``value`` is ``math.inf`` when some ordered pair is unreachable;
    ``finite_max`` is the largest distance over reachable pairs."""

    value: float
    finite_max: int


def _all_levels(p: PCList, ledger: WorkLedger, backend):
    """Yield (internal source, internal level array) for every source."""
    for s in range(p.n):
        yield s, bfs_levels(p, s, ledger, backend)


def eccentricities(p: PCList, ledger: WorkLedger | None = None,
                   backend: str | None = None) -> tuple[np.ndarray, np.ndarray]:
    """Per-vertex eccentricity over reachable vertices, and a reaches-everyone flag."""
    _check(p)
    ledger = ledger if ledger is not None else WorkLedger()
    ecc = np.zeros(p.n, dtype=np.int64)
    full = np.zeros(p.n, dtype=bool)
    for s, level in _all_levels(p, ledger, backend):
        ecc[s] = level.max()
        full[s] = bool((level >= 0).all())
    return ecc[p.to_internal], full[p.to_internal]


def diameter(p: PCList, ledger: WorkLedger | None = None,
             backend: str | None = None) -> Diameter:
    if p.n == 0:
        raise ValueError("diameter of the empty graph is undefined")
    ecc, full = eccentricities(p, ledger, backend)
    finite = int(ecc.max())
    return Diameter(finite if full.all() else math.inf, finite)


def transitive_closure(p: PCList, ledger: WorkLedger | None = None,
                       backend: str | None = None) -> ReachMatrix:
    _check(p)
    ledger = ledger if ledger is not None else WorkLedger()
    bits = np.zeros((p.n, p.n), dtype=bool)
    for s, level in _all_levels(p, ledger, backend):
        bits[s] = level >= 0
    # internal -> original on both axes
    bits = bits[np.ix_(p.to_internal, p.to_internal)]
    return ReachMatrix(p.n, bits)
