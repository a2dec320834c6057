"""Edge-list text format.

::

    # comment
    n 5
    0 1
    1 2

The first non-comment line fixes the vertex count; every other line is one
edge (or arc) given as two 0-based vertex indices.  Blank lines are ignored.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, TextIO

from .graph import Digraph, Edge, Graph


class ParseError(ValueError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


def _parse(lines: Iterable[str]) -> tuple[int, list[Edge]]:
    n = None
    pairs: list[Edge] = []
    lineno = 0
    for lineno, raw in enumerate(lines, start=1):
        text = raw.strip()
        if not text or text.startswith("#"):
            continue
        fields = text.split()
        if n is None:
            if len(fields) != 2 or fields[0] != "n":
                raise ParseError("expected header 'n <vertex_count>'", lineno)
            try:
                n = int(fields[1])
            except ValueError:
                raise ParseError(f"bad vertex count {fields[1]!r}", lineno) from None
            if n < 0:
                raise ParseError("vertex count must be non-negative", lineno)
            continue
        if len(fields) != 2:
            raise ParseError(f"expected two vertex indices, got {text!r}", lineno)
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise ParseError(f"non-integer vertex in {text!r}", lineno) from None
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex out of range 0..{n - 1} in {text!r}", lineno)
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", lineno)
        pairs.append((u, v))
    if n is None:
        raise ParseError("missing header 'n <vertex_count>'", lineno + 1)
    return n, pairs


def parse_graph(text: str) -> Graph:
    n, pairs = _parse(text.splitlines())
    return Graph.from_edges(n, pairs)


def parse_digraph(text: str) -> Digraph:
    n, pairs = _parse(text.splitlines())
    return Digraph.from_arcs(n, pairs)


def read_graph(path: str | Path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        n, pairs = _parse(fh)
    return Graph.from_edges(n, pairs)


def read_digraph(path: str | Path) -> Digraph:
    with open(path, encoding="utf-8") as fh:
        n, pairs = _parse(fh)
    return Digraph.from_arcs(n, pairs)


def format_graph(g: Graph, comment: str | None = None) -> str:
    """Serialize a graph on ``0..n-1``."""
    if g.vertices != frozenset(range(g.n)):
        raise ValueError("only graphs on 0..n-1 can be written in edge-list form")
    out = []
    if comment:
        out.extend(f"# {line}" for line in comment.splitlines())
    out.append(f"n {g.n}")
    out.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(out) + "\n"


def format_digraph(d: Digraph) -> str:
    if d.vertices != frozenset(range(d.n)):
        raise ValueError("only digraphs on 0..n-1 can be written in edge-list form")
    lines = [f"n {d.n}"] + [f"{u} {v}" for u, v in sorted(d.arcs)]
    return "\n".join(lines) + "\n"


def write_graph(g: Graph, fh: TextIO | str | Path) -> None:
    if isinstance(fh, (str, Path)):
        Path(fh).write_text(format_graph(g), encoding="utf-8")
    else:
        fh.write(format_graph(g))
