"""Text formats.

``.hg``: first line ``n m``, then ``m`` lines of strictly increasing 0-based
vertex ids.  ``.col``: first line ``m q``, then ``m`` lines ``edge_index
color``.  Lines starting with ``#`` are comments; files end with a newline.
"""

from __future__ import annotations

from pathlib import Path

from .coloring import EdgeColoring
from .core import Hypergraph


class ParseError(ValueError):
    def __init__(self, lineno: int, msg: str):
        super().__init__(f"line {lineno}: {msg}")
        self.lineno = lineno


def _content_lines(text: str) -> list[tuple[int, list[str]]]:
    if text and not text.endswith("\n"):
        raise ParseError(text.count("\n") + 1, "missing trailing newline")
    out = []
    for i, line in enumerate(text.splitlines(), start=1):
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        out.append((i, s.split()))
    return out


def _ints(lineno: int, toks: list[str]) -> list[int]:
    try:
        return [int(t) for t in toks]
    except ValueError:
        raise ParseError(lineno, f"expected integers, got {' '.join(toks)!r}") from None


def parse_hg(text: str) -> Hypergraph:
    lines = _content_lines(text)
    if not lines:
        raise ParseError(1, "empty file, expected header 'n m'")
    lineno, toks = lines[0]
    head = _ints(lineno, toks)
    if len(head) != 2 or min(head) < 0:
        raise ParseError(lineno, "header must be two non-negative integers 'n m'")
    n, m = head
    body = lines[1:]
    if len(body) != m:
        last = body[-1][0] if body else lineno
        raise ParseError(last, f"header announces {m} edges, found {len(body)}")
    seen: dict[tuple[int, ...], int] = {}
    edges = []
    for lineno, toks in body:
        e = _ints(lineno, toks)
        if len(e) < 2:
            raise ParseError(lineno, "hyperedge needs at least two vertices")
        if any(a >= b for a, b in zip(e, e[1:])):
            raise ParseError(lineno, "vertex ids must be strictly increasing")
        if e[0] < 0 or e[-1] >= n:
            raise ParseError(lineno, f"vertex id outside [0, {n})")
        t = tuple(e)
        if t in seen:
            raise ParseError(lineno, f"duplicate hyperedge (first on line {seen[t]})")
        seen[t] = lineno
        edges.append(t)
    return Hypergraph(n, edges)


def emit_hg(H: Hypergraph) -> str:
    return "".join([f"{H.n} {H.m}\n"] + [" ".join(map(str, e)) + "\n" for e in H.edges])


def parse_col(text: str) -> EdgeColoring:
    lines = _content_lines(text)
    if not lines:
        raise ParseError(1, "empty file, expected header 'm q'")
    lineno, toks = lines[0]
    head = _ints(lineno, toks)
    if len(head) != 2:
        raise ParseError(lineno, "header must be 'm q'")
    m, q = head
    body = lines[1:]
    if len(body) != m:
        last = body[-1][0] if body else lineno
        raise ParseError(last, f"header announces {m} edges, found {len(body)}")
    colors = [-1] * m
    for lineno, toks in body:
        vals = _ints(lineno, toks)
        if len(vals) != 2:
            raise ParseError(lineno, "expected 'edge_index color'")
        i, c = vals
        if not 0 <= i < m:
            raise ParseError(lineno, f"edge index {i} outside [0, {m})")
        if colors[i] != -1:
            raise ParseError(lineno, f"edge {i} coloured twice")
        if not 0 <= c < q:
            raise ParseError(lineno, f"colour {c} outside [0, {q})")
        colors[i] = c
    try:
        col = EdgeColoring(tuple(colors))
    except ValueError as exc:
        raise ParseError(lines[0][0], str(exc)) from None
    if col.num_colors != q:
        raise ParseError(lines[0][0], f"header says {q} colours, {col.num_colors} used")
    return col


def emit_col(c: EdgeColoring) -> str:
    return "".join([f"{len(c)} {c.num_colors if len(c) else 0}\n"] + [f"{i} {col}\n" for i, col in enumerate(c.colors)])


def read_hg(path: str | Path) -> Hypergraph:
    return parse_hg(Path(path).read_text())


def write_hg(H: Hypergraph, path: str | Path) -> None:
    Path(path).write_text(emit_hg(H))
