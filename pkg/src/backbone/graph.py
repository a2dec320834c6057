"""Immutable graph and digraph values shared by every other module.

Vertices are non-negative integers.  A subgraph keeps the identifiers of its
host, so a vertex can be tracked through every stage of the pipeline without
relabeling.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator

Edge = tuple[int, int]


def edge_key(u: int, v: int) -> Edge:
    """Canonical (smaller, larger) form of an undirected edge."""
    return (u, v) if u < v else (v, u)


class Graph:
    """Simple undirected graph.

    The vertex set may be any finite set of non-negative integers; graphs read
    from a file use ``0..n-1``.  Instances are never mutated after
    construction, so they are safe to share.
    """

    __slots__ = ("_adj", "_edges", "_sorted")

    def __init__(self, vertices: Iterable[int] = (), edges: Iterable[Edge] = ()):
        adj: dict[int, set[int]] = {}
        for v in vertices:
            if not isinstance(v, int) or v < 0:
                raise ValueError(f"vertex identifiers must be non-negative integers, got {v!r}")
            adj[v] = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if u not in adj or v not in adj:
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside the vertex set")
            adj[u].add(v)
            adj[v].add(u)
        self._adj: dict[int, frozenset[int]] = {v: frozenset(nb) for v, nb in adj.items()}
        self._edges: frozenset[Edge] | None = None
        self._sorted: tuple[int, ...] | None = None

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge] = ()) -> Graph:
        """Graph on the dense vertex set ``0..n-1``."""
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        return cls(range(n), edges)

    @classmethod
    def _from_adjacency(cls, adj: dict[int, frozenset[int]]) -> Graph:
        g = cls.__new__(cls)
        g._adj = adj
        g._edges = None
        g._sorted = None
        return g

    # -- basic queries -----------------------------------------------------

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self._adj)

    def vertex_list(self) -> tuple[int, ...]:
        if self._sorted is None:
            self._sorted = tuple(sorted(self._adj))
        return self._sorted

    @property
    def n(self) -> int:
        return len(self._adj)

    vertex_count = n

    @property
    def edges(self) -> frozenset[Edge]:
        if self._edges is None:
            self._edges = frozenset(
                (u, v) for u, nb in self._adj.items() for v in nb if u < v)
        return self._edges

    @property
    def m(self) -> int:
        return sum(len(nb) for nb in self._adj.values()) // 2

    def __contains__(self, v: object) -> bool:
        return v in self._adj

    def __iter__(self) -> Iterator[int]:
        return iter(self.vertex_list())

    def __len__(self) -> int:
        return len(self._adj)

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        nb = self._adj.get(u)
        return nb is not None and v in nb

    def min_degree(self) -> int:
        if not self._adj:
            raise ValueError("minimum degree of the empty graph is undefined")
        return min(len(nb) for nb in self._adj.values())

    def degree_into(self, v: int, targets: frozenset[int] | set[int]) -> int:
        """Number of neighbors of ``v`` inside ``targets``."""
        return len(self._adj[v] & targets)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    # -- derived graphs ----------------------------------------------------

    def induced(self, s: Iterable[int]) -> Graph:
        return induced_subgraph(self, s)

    def without(self, removed: Iterable[int]) -> Graph:
        removed = set(removed)
        return induced_subgraph(self, (v for v in self._adj if v not in removed))

    def spanning(self, edges: Iterable[Edge]) -> Graph:
        """Spanning subgraph with the given edges (each must be an edge of self)."""
        edges = list(edges)
        for u, v in edges:
            if not self.has_edge(u, v):
                raise ValueError(f"({u}, {v}) is not an edge of the host graph")
        return Graph(self._adj, edges)

    def components(self, removed: Iterable[int] = ()) -> list[frozenset[int]]:
        """Connected components of ``self - removed``, smallest first.

        Ties in size are broken by the smallest member, so the order is
        deterministic.
        """
        gone = set(removed)
        seen = set(gone)
        comps = []
        for s in self.vertex_list():
            if s in seen:
                continue
            seen.add(s)
            comp = [s]
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for w in self._adj[u]:
                    if w not in seen:
                        seen.add(w)
                        comp.append(w)
                        queue.append(w)
            comps.append(frozenset(comp))
        comps.sort(key=lambda c: (len(c), min(c)))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def two_coloring(self) -> Bipartition | None:
        """A proper 2-coloring, or None when the graph has an odd cycle.

        The smallest vertex of every component goes to ``side_a``.
        """
        color: dict[int, int] = {}
        for s in self.vertex_list():
            if s in color:
                continue
            color[s] = 0
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for w in self._adj[u]:
                    if w not in color:
                        color[w] = 1 - color[u]
                        queue.append(w)
                    elif color[w] == color[u]:
                        return None
        return Bipartition(frozenset(v for v, c in color.items() if c == 0),
                           frozenset(v for v, c in color.items() if c == 1))

    def is_bipartite(self) -> bool:
        return self.two_coloring() is not None

    # -- value semantics ---------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self.vertices, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


class Digraph:
    """Directed graph without self-loops; opposite arcs may coexist."""

    __slots__ = ("_succ",)

    def __init__(self, vertices: Iterable[int] = (), arcs: Iterable[Edge] = ()):
        succ: dict[int, set[int]] = {}
        for v in vertices:
            if not isinstance(v, int) or v < 0:
                raise ValueError(f"vertex identifiers must be non-negative integers, got {v!r}")
            succ[v] = set()
        for u, v in arcs:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if u not in succ or v not in succ:
                raise ValueError(f"arc ({u}, {v}) has an endpoint outside the vertex set")
            succ[u].add(v)
        self._succ: dict[int, frozenset[int]] = {v: frozenset(s) for v, s in succ.items()}

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[Edge] = ()) -> Digraph:
        return cls(range(n), arcs)

    @classmethod
    def symmetric(cls, g: Graph) -> Digraph:
        """Both orientations of every edge of ``g``."""
        return cls(g.vertices, [a for u, v in g.edges for a in ((u, v), (v, u))])

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self._succ)

    def vertex_list(self) -> tuple[int, ...]:
        return tuple(sorted(self._succ))

    @property
    def n(self) -> int:
        return len(self._succ)

    vertex_count = n

    @property
    def arcs(self) -> frozenset[Edge]:
        return frozenset((u, v) for u, s in self._succ.items() for v in s)

    def __contains__(self, v: object) -> bool:
        return v in self._succ

    def __len__(self) -> int:
        return len(self._succ)

    def successors(self, v: int) -> frozenset[int]:
        return self._succ[v]

    def out_degree(self, v: int) -> int:
        return len(self._succ[v])

    def min_out_degree(self) -> int:
        if not self._succ:
            raise ValueError("minimum out-degree of the empty digraph is undefined")
        return min(len(s) for s in self._succ.values())

    def induced(self, s: Iterable[int]) -> Digraph:
        keep = set(s)
        missing = keep - self._succ.keys()
        if missing:
            raise ValueError(f"vertices {sorted(missing)} are not in the digraph")
        d = Digraph.__new__(Digraph)
        d._succ = {v: self._succ[v] & keep for v in keep}
        return d

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self._succ == other._succ

    def __hash__(self) -> int:
        return hash((self.vertices, self.arcs))

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, arcs={len(self.arcs)})"


@dataclass(frozen=True)
class Bipartition:
    """Two disjoint sides; their union is the ground set."""

    side_a: frozenset[int]
    side_b: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "side_a", frozenset(self.side_a))
        object.__setattr__(self, "side_b", frozenset(self.side_b))
        overlap = self.side_a & self.side_b
        if overlap:
            raise ValueError(f"sides overlap on {sorted(overlap)}")

    @property
    def ground(self) -> frozenset[int]:
        return self.side_a | self.side_b

    def side_of(self, v: int) -> int:
        if v in self.side_a:
            return 0
        if v in self.side_b:
            return 1
        raise KeyError(v)

    def swapped(self) -> Bipartition:
        return Bipartition(self.side_b, self.side_a)

    def crosses(self, u: int, v: int) -> bool:
        return (u in self.side_a) != (v in self.side_a)


@dataclass(frozen=True)
class EdgeCut:
    separated_set: frozenset[int]
    crossing_edges: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self):
        for u, v in self.crossing_edges:
            if (u in self.separated_set) == (v in self.separated_set):
                raise ValueError(f"edge ({u}, {v}) does not cross the cut")

    def __len__(self) -> int:
        return len(self.crossing_edges)


def induced_subgraph(g: Graph, s: Iterable[int]) -> Graph:
    """Subgraph on ``s`` with every edge of ``g`` that has both ends in ``s``."""
    keep = frozenset(s)
    missing = [v for v in keep if v not in g]
    if missing:
        raise ValueError(f"vertices {sorted(missing)} are not in the graph")
    return Graph._from_adjacency({v: g.neighbors(v) & keep for v in keep})


def underlying_graph(d: Digraph) -> Graph:
    """Forget directions and merge parallel arcs."""
    return Graph(d.vertices, ((u, v) for u, v in d.arcs))


def average_degree(g: Graph) -> Fraction:
    if g.n == 0:
        raise ValueError("average degree of the empty graph is undefined")
    return Fraction(2 * g.m, g.n)


def cross_subgraph(g: Graph, p: Bipartition) -> Graph:
    """Spanning subgraph keeping exactly the edges between the two sides."""
    if p.ground != g.vertices:
        raise ValueError("bipartition does not partition the vertex set")
    a = p.side_a
    return Graph._from_adjacency(
        {v: (nb - a if v in a else nb & a) for v, nb in ((v, g.neighbors(v)) for v in g.vertices)})


def edge_cut(g: Graph, s: Iterable[int]) -> EdgeCut:
    """The edges of ``g`` with exactly one endpoint in ``s``."""
    s = frozenset(s)
    crossing = frozenset(edge_key(u, v) for u in s for v in g.neighbors(u) if v not in s)
    return EdgeCut(s, crossing)
