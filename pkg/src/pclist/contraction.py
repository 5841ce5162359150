"""Vertex-set contraction on out-mode pc-lists.

For a set B with switched members S, the contracted vertex is switched iff
S is non-empty.  Its stored list is ``(X - Y) - B`` where X is the merge
intersection of the switched members' lists and Y the union of the
unswitched members' lists; with S empty it stores ``Y - B``.  Other lists
are rewritten by the membership rule: an unswitched vertex keeps the new
vertex if it stored any member, a switched vertex keeps it only if it
stored every member.
"""

from __future__ import annotations

import numpy as np

from .ledger import WorkLedger
from .pclist_core import ModeError, PCList, from_rows


def _validate(p: PCList, beta) -> list[list[int]]:
    if p.mode != "out":
        raise ModeError("contraction is defined for out-mode pc-lists")
    blocks = []
    seen = set()
    for block in beta:
        block = sorted(int(v) for v in block)
        if not block:
            raise ValueError("contracted sets must be non-empty")
        for v in block:
            if not 0 <= v < p.n:
                raise ValueError(f"vertex {v} out of range")
            if v in seen:
                raise ValueError(f"sets overlap at vertex {v}")
            seen.add(v)
        blocks.append(block)
    return blocks


def contraction_mapping(n: int, beta) -> list[int]:
    """Old id -> new id; groups are numbered in order of their smallest member."""
    group = list(range(n))
    for block in beta:
        low = min(block)
        for v in block:
            group[v] = low
    reps = sorted(set(group))
    new_id = {r: i for i, r in enumerate(reps)}
    return [new_id[group[v]] for v in range(n)]


def incident_size(p: PCList, b) -> int:
    """Stored arcs with at least one endpoint in ``b``."""
    members = np.zeros(p.n, dtype=bool)
    members[list(b)] = True
    src = np.repeat(np.arange(p.n), np.diff(p.indptr))
    return int((members[src] | members[p.indices]).sum())


def _intersect(x: list[int], row: list[int], ledger: WorkLedger) -> list[int]:
    out = []
    i = j = 0
    while i < len(x) and j < len(row):
        ledger.charge("pclist_element_charge")
        if x[i] == row[j]:
            out.append(x[i])
            i += 1
            j += 1
        elif x[i] > row[j]:
            j += 1
        else:
            # x[i] misses this member's list: drop it
            i += 1
    ledger.charge("pclist_element_charge", len(x) - i)
    return out


def contracted_list(p: PCList, block: list[int], ledger: WorkLedger) -> tuple[bool, list[int]]:
    """Switch flag and stored list (old labels) of the vertex replacing ``block``."""
    switched = [v for v in block if p.out_bits[v]]
    plain = [v for v in block if not p.out_bits[v]]
    ledger.charge("vertex_charge", len(block))
    y = set()
    for v in plain:
        row = p.stored(v).tolist()
        ledger.charge("pclist_element_charge", len(row))
        y.update(row)
    inside = set(block)
    if switched:
        x = p.stored(switched[0]).tolist()
        ledger.charge("pclist_element_charge", len(x))
        for v in switched[1:]:
            x = _intersect(x, p.stored(v).tolist(), ledger)
        ledger.charge("pclist_element_charge", len(x))
        return True, [u for u in x if u not in y and u not in inside]
    ledger.charge("pclist_element_charge", len(y))
    return False, sorted(u for u in y if u not in inside)


def _relabel(p: PCList, blocks, rows_old, ledger: WorkLedger | None) -> tuple[PCList, list[int]]:
    """Map every list to new ids, applying the membership rule, then sort and dedupe."""
    mapping = contraction_mapping(p.n, blocks)
    size = [0] * (max(mapping) + 1 if mapping else 0)
    for v in range(p.n):
        size[mapping[v]] += 1
    k = len(size)
    rows = [None] * k
    out_bits = np.zeros(k, dtype=np.uint8)
    charge = ledger.charge if ledger is not None else (lambda *a: None)
    for new, (switched, row) in rows_old.items():
        charge("vertex_charge")
        counts: dict[int, int] = {}
        for u in row:
            w = mapping[u]
            counts[w] = counts.get(w, 0) + 1
        charge("pclist_element_charge", len(row))
        if switched:
            kept = [w for w, c in counts.items() if c == size[w] and w != new]
        else:
            kept = [w for w in counts if w != new]
        rows[new] = np.array(sorted(kept), dtype=np.int64)
        charge("pclist_element_charge", len(kept))
        out_bits[new] = switched
    return from_rows(k, "out", out_bits, np.zeros(k, np.uint8), rows, p.directed), mapping


def contract_partition(p: PCList, beta, ledger: WorkLedger | None = None) -> tuple[PCList, list[int]]:
    """Contract every set of the disjoint family ``beta``; ids compacted to [0, n')."""
    blocks = _validate(p, beta)
    ledger = ledger if ledger is not None else WorkLedger()
    mapping = contraction_mapping(p.n, blocks)
    member = set()
    rows_old = {}
    for block in blocks:
        rows_old[mapping[block[0]]] = contracted_list(p, block, ledger)
        member.update(block)
    for v in range(p.n):
        if v not in member:
            rows_old[mapping[v]] = (bool(p.out_bits[v]), p.stored(v).tolist())
    ledger.charge("ledger_misc", p.n)
    return _relabel(p, blocks, rows_old, ledger)


def contract_set(p: PCList, b, ledger: WorkLedger | None = None) -> tuple[PCList, int]:
    """Contract ``b`` to one vertex; returns the new pc-list and the new vertex id.

    The ledger is charged for building the new vertex's list only, which is
    O(n(B) + m~(B)).  The relabelling of other lists is the global cleanup
    pass that ``contract_partition`` pays for once per family.
    """
    (block,) = _validate(p, [b])
    ledger = ledger if ledger is not None else WorkLedger()
    mapping = contraction_mapping(p.n, [block])
    rows_old = {mapping[block[0]]: contracted_list(p, block, ledger)}
    inside = set(block)
    for v in range(p.n):
        if v not in inside:
            rows_old[mapping[v]] = (bool(p.out_bits[v]), p.stored(v).tolist())
    q, mapping = _relabel(p, [block], rows_old, None)
    return q, mapping[block[0]]
