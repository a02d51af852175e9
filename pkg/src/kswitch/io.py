"""Text formats for signed graphs and switching assignments.

Graph file::

    # comment
    n m
    u v s          (m lines, 0-based ids, s is + or -)

Switching file::

    n k
    v t1 ... tk    (n lines, trits in {-1, 0, 1})

Blank lines and lines starting with ``#`` are ignored in both.  Vertex
``v_i`` of a 1-based drawing is id ``i - 1``.
"""

from __future__ import annotations

from pathlib import Path

from .errors import DuplicateEdgeError, LoopError, MalformedLineError, VertexRangeError
from .graph import SignedGraph
from .switching import SwitchingAssignment


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield lineno, raw, line


def _col(raw: str, token_index: int) -> int:
    """1-based column of the token_index-th whitespace-separated token."""
    pos = 0
    tokens = raw.split()
    for i, tok in enumerate(tokens):
        pos = raw.index(tok, pos)
        if i == token_index:
            return pos + 1
        pos += len(tok)
    return len(raw) + 1


def _header(lines, what: str) -> tuple[int, int, int]:
    try:
        lineno, raw, line = next(lines)
    except StopIteration:
        raise MalformedLineError(f"missing '{what}' header", 1) from None
    parts = line.split()
    if len(parts) != 2:
        raise MalformedLineError(f"header must be '{what}'", lineno, _col(raw, 0))
    try:
        a, b = int(parts[0]), int(parts[1])
    except ValueError:
        raise MalformedLineError(f"header must be two integers '{what}'", lineno, _col(raw, 0)) from None
    if a < 0 or b < 0:
        raise MalformedLineError("header values must be non-negative", lineno, _col(raw, 0))
    return lineno, a, b


def parse_graph(text: str) -> SignedGraph:
    lines = _content_lines(text)
    hline, n, m = _header(lines, "n m")
    edges = []
    seen: dict[tuple[int, int], int] = {}
    for lineno, raw, line in lines:
        parts = line.split()
        if len(parts) != 3:
            raise MalformedLineError("edge line must be 'u v s'", lineno, _col(raw, 0))
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise MalformedLineError("vertex ids must be integers", lineno, _col(raw, 0)) from None
        if parts[2] not in ("+", "-"):
            raise MalformedLineError("sign must be + or -", lineno, _col(raw, 2))
        for i, x in enumerate((u, v)):
            if not 0 <= x < n:
                raise VertexRangeError(f"vertex {x} outside 0..{n - 1}", lineno, _col(raw, i))
        if u == v:
            raise LoopError(f"loop at vertex {u}", lineno, _col(raw, 0))
        key = (min(u, v), max(u, v))
        if key in seen:
            raise DuplicateEdgeError(f"edge {u}-{v} already given on line {seen[key]}",
                                     lineno, _col(raw, 0))
        seen[key] = lineno
        edges.append((u, v, 1 if parts[2] == "+" else -1))
    if len(edges) != m:
        raise MalformedLineError(f"header announces {m} edges, found {len(edges)}", hline)
    return SignedGraph(n, tuple(edges))


def serialize_graph(g: SignedGraph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines += [f"{u} {v} {'+' if s > 0 else '-'}" for u, v, s in g.edges]
    return "\n".join(lines) + "\n"


def parse_switching(text: str) -> SwitchingAssignment:
    lines = _content_lines(text)
    hline, n, k = _header(lines, "n k")
    if k < 1:
        raise MalformedLineError("dimension k must be >= 1", hline)
    rows: dict[int, tuple[int, ...]] = {}
    for lineno, raw, line in lines:
        parts = line.split()
        if len(parts) != k + 1:
            raise MalformedLineError(f"row must be 'v' followed by {k} trits", lineno, _col(raw, 0))
        try:
            vals = [int(p) for p in parts]
        except ValueError:
            raise MalformedLineError("row entries must be integers", lineno, _col(raw, 0)) from None
        v = vals[0]
        if not 0 <= v < n:
            raise VertexRangeError(f"vertex {v} outside 0..{n - 1}", lineno, _col(raw, 0))
        if v in rows:
            raise MalformedLineError(f"vertex {v} given twice", lineno, _col(raw, 0))
        for i, t in enumerate(vals[1:], 1):
            if t not in (-1, 0, 1):
                raise MalformedLineError(f"trit {t} not in {{-1, 0, 1}}", lineno, _col(raw, i))
        rows[v] = tuple(vals[1:])
    missing = [v for v in range(n) if v not in rows]
    if missing:
        raise MalformedLineError(f"no row for vertex {missing[0]}", hline)
    return SwitchingAssignment(k, tuple(rows[v] for v in range(n)))


def serialize_switching(zeta: SwitchingAssignment) -> str:
    lines = [f"{len(zeta.values)} {zeta.dimension}"]
    lines += [f"{v} " + " ".join(str(t) for t in vec) for v, vec in enumerate(zeta.values)]
    return "\n".join(lines) + "\n"


def read_graph(path) -> SignedGraph:
    return parse_graph(Path(path).read_text())


def read_switching(path) -> SwitchingAssignment:
    return parse_switching(Path(path).read_text())
