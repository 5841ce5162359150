"""Pc-list traversal kernels.

Plain functions over numpy arrays written in the numba nopython subset.
``pclist.accel`` compiles them with ``numba.njit`` or hands them back
unchanged, so both paths execute the same code.

Shared conventions
------------------
Vertices are internal labels.  The undiscovered set U is kept as two
ascending doubly-linked lists (``unext``/``uprev`` over vertex ids), one per
target class: class 0 holds labels ``< n_low``, class 1 the rest.  A stored
row of ``v`` is split at ``split[v]`` into the class-0 block and the class-1
block.  Block ``c`` of ``v`` lists neighbours when ``out_bits[v] == c``
(here ``in_bits`` of a class-``c`` target equals ``c``) and non-neighbours
otherwise; crossing ``split[v]`` flips the effective bit.

Charges are returned as ``int64[4]`` ordered like ``ledger.CATEGORIES``.
"""

import numpy as np

VERTEX = 0
ELEMENT = 1
QUEUE = 2
MISC = 3


def _init_u(n, n_low, unext, uprev, inu, uhead, utail):
    for c in range(2):
        lo = 0 if c == 0 else n_low
        hi = n_low if c == 0 else n
        if lo >= hi:
            uhead[c] = -1
            utail[c] = -1
            continue
        uhead[c] = lo
        utail[c] = hi - 1
        for v in range(lo, hi):
            uprev[v] = v - 1 if v > lo else -1
            unext[v] = v + 1 if v + 1 < hi else -1
            inu[v] = 1


def _u_remove(v, n_low, unext, uprev, inu, uhead, utail):
    c = 0 if v < n_low else 1
    p = uprev[v]
    q = unext[v]
    if p != -1:
        unext[p] = q
    else:
        uhead[c] = q
    if q != -1:
        uprev[q] = p
    else:
        utail[c] = p
    inu[v] = 0


def _scan_vertex(v, lvl, indptr, indices, split, out_bits, n_low,
                 unext, uprev, inu, uhead, utail, mark,
                 queue, qtail, parent, level, order, olen, counts):
    """Discover every undiscovered neighbour of ``v``; returns new (qtail, olen)."""
    for c in range(2):
        if c == 0:
            lo = indptr[v]
            hi = split[v]
        else:
            lo = split[v]
            hi = indptr[v + 1]
        counts[MISC] += 1
        if out_bits[v] == c:
            # block lists neighbours
            for pos in range(lo, hi):
                u = indices[pos]
                counts[ELEMENT] += 1
                if inu[u] == 1:
                    _u_remove(u, n_low, unext, uprev, inu, uhead, utail)
                    parent[u] = v
                    level[u] = lvl + 1
                    order[olen] = u
                    olen += 1
                    queue[qtail] = u
                    qtail += 1
                    counts[VERTEX] += 1
                    counts[QUEUE] += 1
        else:
            # block lists non-neighbours: mark them, collect unmarked part of U_c
            if uhead[c] == -1:
                continue
            for pos in range(lo, hi):
                u = indices[pos]
                counts[ELEMENT] += 1
                if inu[u] == 1:
                    mark[u] = 1
            u = uhead[c]
            while u != -1:
                nxt = unext[u]
                if mark[u] == 1:
                    # clearing is charged to the list element that set the mark
                    mark[u] = 0
                    counts[ELEMENT] += 1
                else:
                    _u_remove(u, n_low, unext, uprev, inu, uhead, utail)
                    parent[u] = v
                    level[u] = lvl + 1
                    order[olen] = u
                    olen += 1
                    queue[qtail] = u
                    qtail += 1
                    counts[VERTEX] += 1
                    counts[QUEUE] += 1
                u = nxt
    return qtail, olen


def bfs_kernel(indptr, indices, split, out_bits, n_low, source):
    """BFS from ``source``; returns (order, olen, parent, level, counts, marks_clear)."""
    n = indptr.shape[0] - 1
    counts = np.zeros(4, dtype=np.int64)
    unext = np.empty(n, dtype=np.int64)
    uprev = np.empty(n, dtype=np.int64)
    inu = np.zeros(n, dtype=np.uint8)
    uhead = np.empty(2, dtype=np.int64)
    utail = np.empty(2, dtype=np.int64)
    mark = np.zeros(n, dtype=np.uint8)
    queue = np.empty(n, dtype=np.int64)
    parent = np.full(n, -1, dtype=np.int64)
    level = np.full(n, -1, dtype=np.int64)
    order = np.empty(n, dtype=np.int64)
    _init_u(n, n_low, unext, uprev, inu, uhead, utail)
    counts[MISC] += 1

    _u_remove(source, n_low, unext, uprev, inu, uhead, utail)
    level[source] = 0
    order[0] = source
    olen = 1
    queue[0] = source
    qhead = 0
    qtail = 1
    counts[VERTEX] += 1
    counts[QUEUE] += 1
    while qhead < qtail:
        v = queue[qhead]
        qhead += 1
        counts[QUEUE] += 1
        counts[VERTEX] += 1
        qtail, olen = _scan_vertex(v, level[v], indptr, indices, split, out_bits, n_low,
                                   unext, uprev, inu, uhead, utail, mark,
                                   queue, qtail, parent, level, order, olen, counts)
    marks_clear = True
    for v in range(n):
        if mark[v] != 0:
            marks_clear = False
    return order, olen, parent, level, counts, marks_clear


def components_kernel(indptr, indices, split, out_bits, n_low):
    """Component ids via BFS sweeps sharing one undiscovered set."""
    n = indptr.shape[0] - 1
    counts = np.zeros(4, dtype=np.int64)
    unext = np.empty(n, dtype=np.int64)
    uprev = np.empty(n, dtype=np.int64)
    inu = np.zeros(n, dtype=np.uint8)
    uhead = np.empty(2, dtype=np.int64)
    utail = np.empty(2, dtype=np.int64)
    mark = np.zeros(n, dtype=np.uint8)
    queue = np.empty(n, dtype=np.int64)
    parent = np.full(n, -1, dtype=np.int64)
    level = np.full(n, -1, dtype=np.int64)
    order = np.empty(n, dtype=np.int64)
    comp = np.full(n, -1, dtype=np.int64)
    _init_u(n, n_low, unext, uprev, inu, uhead, utail)
    counts[MISC] += 1
    olen = 0
    ncomp = 0
    for s in range(n):
        counts[MISC] += 1
        if inu[s] == 0:
            continue
        _u_remove(s, n_low, unext, uprev, inu, uhead, utail)
        level[s] = 0
        start = olen
        order[olen] = s
        olen += 1
        queue[0] = s
        qhead = 0
        qtail = 1
        counts[VERTEX] += 1
        counts[QUEUE] += 1
        while qhead < qtail:
            v = queue[qhead]
            qhead += 1
            counts[QUEUE] += 1
            counts[VERTEX] += 1
            qtail, olen = _scan_vertex(v, level[v], indptr, indices, split, out_bits, n_low,
                                       unext, uprev, inu, uhead, utail, mark,
                                       queue, qtail, parent, level, order, olen, counts)
        for i in range(start, olen):
            comp[order[i]] = ncomp
        ncomp += 1
    return comp, ncomp, counts


def _e_remove(pos, v, c, enext, eprev, ehead, etail):
    p = eprev[pos]
    q = enext[pos]
    if p != -1:
        enext[p] = q
    else:
        ehead[2 * v + c] = q
    if q != -1:
        eprev[q] = p
    else:
        etail[2 * v + c] = p


def dfs_kernel(indptr, indices, split, out_bits, n_low, source):
    """DFS from ``source``; returns (order, olen, parent, counts).

    Switched blocks use the sorted merge walk of U against the stored
    non-neighbours, with the restart step after each child returns: walk
    back over stored entries that have left U (deleting them) to the last
    entry still in U, and resume U just after it.
    """
    n = indptr.shape[0] - 1
    m = indices.shape[0]
    counts = np.zeros(4, dtype=np.int64)
    unext = np.empty(n, dtype=np.int64)
    uprev = np.empty(n, dtype=np.int64)
    inu = np.zeros(n, dtype=np.uint8)
    uhead = np.empty(2, dtype=np.int64)
    utail = np.empty(2, dtype=np.int64)
    _init_u(n, n_low, unext, uprev, inu, uhead, utail)

    # per-(vertex, block) linked lists over stored positions
    enext = np.empty(m, dtype=np.int64)
    eprev = np.empty(m, dtype=np.int64)
    ehead = np.full(2 * n, -1, dtype=np.int64)
    etail = np.full(2 * n, -1, dtype=np.int64)
    for v in range(n):
        for c in range(2):
            lo = indptr[v] if c == 0 else split[v]
            hi = split[v] if c == 0 else indptr[v + 1]
            if lo < hi:
                ehead[2 * v + c] = lo
                etail[2 * v + c] = hi - 1
                for pos in range(lo, hi):
                    eprev[pos] = pos - 1 if pos > lo else -1
                    enext[pos] = pos + 1 if pos + 1 < hi else -1
    counts[MISC] += 1

    blk = np.zeros(n, dtype=np.int64)
    pos_cur = np.zeros(n, dtype=np.int64)
    u_cur = np.full(n, -2, dtype=np.int64)
    n_cur = np.full(n, -1, dtype=np.int64)
    restart = np.zeros(n, dtype=np.uint8)
    parent = np.full(n, -1, dtype=np.int64)
    order = np.empty(n, dtype=np.int64)
    stack = np.empty(n, dtype=np.int64)

    _u_remove(source, n_low, unext, uprev, inu, uhead, utail)
    order[0] = source
    olen = 1
    stack[0] = source
    sp = 1
    counts[VERTEX] += 1
    pos_cur[source] = indptr[source]
    n_cur[source] = ehead[2 * source]

    while sp > 0:
        v = stack[sp - 1]
        found = -1
        while blk[v] < 2:
            c = blk[v]
            if out_bits[v] == c:
                hi = split[v] if c == 0 else indptr[v + 1]
                p = pos_cur[v]
                while p < hi:
                    u = indices[p]
                    p += 1
                    counts[ELEMENT] += 1
                    if inu[u] == 1:
                        found = u
                        break
                pos_cur[v] = p
            else:
                key = 2 * v + c
                ncur = n_cur[v]
                if restart[v] == 1:
                    restart[v] = 0
                    w = eprev[ncur] if ncur != -1 else etail[key]
                    while w != -1 and inu[indices[w]] == 0:
                        t = w
                        w = eprev[t]
                        _e_remove(t, v, c, enext, eprev, ehead, etail)
                        counts[ELEMENT] += 1
                    u = uhead[c] if w == -1 else unext[indices[w]]
                elif u_cur[v] == -2:
                    u = uhead[c]
                else:
                    u = u_cur[v]
                while u != -1:
                    if ncur != -1 and indices[ncur] == u:
                        counts[ELEMENT] += 1
                        u = unext[u]
                        ncur = enext[ncur]
                    elif ncur != -1 and u > indices[ncur]:
                        t = ncur
                        ncur = enext[ncur]
                        _e_remove(t, v, c, enext, eprev, ehead, etail)
                        counts[ELEMENT] += 1
                    else:
                        found = u
                        break
                u_cur[v] = u
                n_cur[v] = ncur
                if found != -1:
                    restart[v] = 1
            if found != -1:
                break
            # block exhausted: cross the dummy separator
            blk[v] += 1
            counts[MISC] += 1
            if blk[v] == 1:
                pos_cur[v] = split[v]
                u_cur[v] = -2
                n_cur[v] = ehead[2 * v + 1]
        if found == -1:
            sp -= 1
            counts[VERTEX] += 1
            continue
        u = found
        _u_remove(u, n_low, unext, uprev, inu, uhead, utail)
        parent[u] = v
        order[olen] = u
        olen += 1
        stack[sp] = u
        sp += 1
        counts[VERTEX] += 1
        pos_cur[u] = indptr[u]
        n_cur[u] = ehead[2 * u]
    return order, olen, parent, counts
