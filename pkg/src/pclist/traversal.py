"""BFS, DFS and connected components on out- and Seidel-mode pc-lists."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .accel import kernels
from .ledger import WorkLedger
from .pclist_core import ModeError, PCList


@dataclass
class TraversalResult:
    """Traversal output in original labels; ``-1`` marks absent parent/level."""

    order: list[int]
    parent: np.ndarray
    level: np.ndarray | None = None
    ledger: WorkLedger = field(default_factory=WorkLedger)
    marks_clear: bool = True

    @property
    def visited(self) -> set[int]:
        return set(self.order)


def _check(p: PCList, source: int | None = None) -> None:
    if not p.traversable():
        raise ModeError(f"traversal is defined for out and seidel modes, not {p.mode!r}")
    if source is not None and not 0 <= source < p.n:
        raise ValueError(f"source {source} out of range for n={p.n}")


def _to_original(p: PCList, internal: np.ndarray, is_vertex: bool) -> np.ndarray:
    """Permute a per-internal-vertex array to original indexing."""
    out = internal[p.to_internal]
    if is_vertex:
        out = np.where(out >= 0, p.to_original[np.maximum(out, 0)], -1)
    return out


def pclist_bfs(p: PCList, source: int, ledger: WorkLedger | None = None,
               backend: str | None = None) -> TraversalResult:
    """Breadth-first search of the graph ``p`` represents, from ``source``."""
    _check(p, source)
    ledger = ledger if ledger is not None else WorkLedger()
    k = kernels(backend)
    order, olen, parent, level, counts, clear = k.bfs_kernel(
        p.indptr, p.indices, p.split, p.out_bits, p.n_low, int(p.to_internal[source]))
    ledger.charge_array(counts)
    return TraversalResult(
        order=p.to_original[order[:olen]].tolist(),
        parent=_to_original(p, parent, True),
        level=_to_original(p, level, False),
        ledger=ledger,
        marks_clear=bool(clear),
    )


def bfs_levels(p: PCList, source: int, ledger: WorkLedger | None = None,
               backend: str | None = None) -> np.ndarray:
    """Levels only, in internal labels of ``p`` (hot path for all-pairs loops)."""
    k = kernels(backend)
    _, _, _, level, counts, _ = k.bfs_kernel(p.indptr, p.indices, p.split, p.out_bits,
                                             p.n_low, int(source))
    if ledger is not None:
        ledger.charge_array(counts)
    return level


def pclist_dfs(p: PCList, source: int, ledger: WorkLedger | None = None,
               backend: str | None = None) -> TraversalResult:
    """Depth-first search; neighbours are tried in ascending internal label order."""
    _check(p, source)
    ledger = ledger if ledger is not None else WorkLedger()
    k = kernels(backend)
    order, olen, parent, counts = k.dfs_kernel(
        p.indptr, p.indices, p.split, p.out_bits, p.n_low, int(p.to_internal[source]))
    ledger.charge_array(counts)
    return TraversalResult(
        order=p.to_original[order[:olen]].tolist(),
        parent=_to_original(p, parent, True),
        ledger=ledger,
    )


def connected_components(p: PCList, ledger: WorkLedger | None = None,
                         backend: str | None = None) -> np.ndarray:
    """Per-vertex component ids (original labels), numbered by first vertex swept."""
    _check(p)
    if p.directed:
        raise ModeError("connected components need a symmetric represented graph")
    ledger = ledger if ledger is not None else WorkLedger()
    k = kernels(backend)
    comp, _, counts = k.components_kernel(p.indptr, p.indices, p.split, p.out_bits, p.n_low)
    ledger.charge_array(counts)
    return comp[p.to_internal]
