"""Edge-list files: a header ``n m d|u`` followed by m lines ``u v``.

Undirected files list each edge once.  Blank lines and ``#`` comments are
skipped.
"""

from __future__ import annotations

from pathlib import Path

from .graph_core import Graph, from_arcs


class ParseError(ValueError):
    pass


def _ints(line: str, lineno: int, count: int) -> list[int]:
    parts = line.split()
    if len(parts) != count:
        raise ParseError(f"line {lineno}: expected {count} fields, got {len(parts)}")
    try:
        return [int(x) for x in parts]
    except ValueError:
        raise ParseError(f"line {lineno}: non-integer field in {line.strip()!r}") from None


def parse_edgelist(text: str) -> Graph:
    lines = [(i, ln.split("#", 1)[0]) for i, ln in enumerate(text.splitlines(), 1)]
    lines = [(i, ln) for i, ln in lines if ln.strip()]
    if not lines:
        raise ParseError("empty file")
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 3 or parts[2] not in ("d", "u"):
        raise ParseError(f"line {lineno}: header must be 'n m d|u'")
    n, m = _ints(" ".join(parts[:2]), lineno, 2)
    directed = parts[2] == "d"
    if n < 0 or m < 0:
        raise ParseError(f"line {lineno}: negative count")
    body = lines[1:]
    if len(body) != m:
        raise ParseError(f"header promises {m} edges, file has {len(body)}")
    seen = set()
    arcs = []
    for lineno, line in body:
        u, v = _ints(line, lineno, 2)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"line {lineno}: vertex out of range [0, {n})")
        if u == v:
            raise ParseError(f"line {lineno}: self-loop at {u}")
        key = (u, v) if directed else (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"line {lineno}: duplicate edge {u} {v}")
        seen.add(key)
        arcs.append((u, v))
    return from_arcs(n, arcs, directed=directed)


def serialize_edgelist(g: Graph) -> str:
    if g.directed:
        pairs = list(g.arcs())
    else:
        pairs = [(u, v) for u, v in g.arcs() if u < v]
    out = [f"{g.n} {len(pairs)} {'d' if g.directed else 'u'}"]
    out += [f"{u} {v}" for u, v in pairs]
    return "\n".join(out) + "\n"


def read_edgelist(path) -> Graph:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    return parse_edgelist(text)


def write_edgelist(g: Graph, path) -> None:
    Path(path).write_text(serialize_edgelist(g))


def read_vertex_set(path, n: int) -> list[int]:
    """One vertex id per line."""
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    out = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        (v,) = _ints(line, lineno, 1)
        if not 0 <= v < n:
            raise ParseError(f"line {lineno}: vertex {v} out of range [0, {n})")
        out.append(v)
    return sorted(set(out))
