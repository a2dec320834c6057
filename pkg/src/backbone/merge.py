"""Gluing k-connected pieces and single vertices into one k-connected graph.

A tuple ``X = (G_1..G_t, u_{t+1}..u_{t+s})`` of disjoint k-connected graphs
and single vertices, together with a k-connected pattern graph R on the
element indices, defines the family of graphs G where

  (i)   the elements of X, taken together, form a spanning subgraph of G;
  (ii)  every edge ij of R is realized by some edge of G between X_i and X_j;
  (iii) every graph element G_i sends k independent edges to k distinct
        other elements.

Every member of that family is k-connected.  Element indices are 0-based
here.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from . import oracle
from .connectivity import Matching, hopcroft_karp, is_k_connected
from .errors import InvariantError
from .graph import Edge, Graph, edge_key


class MergeError(ValueError):
    def __init__(self, condition: str, detail: str):
        super().__init__(f"condition ({condition}) cannot be met: {detail}")
        self.condition = condition


@dataclass(frozen=True)
class PieceTuple:
    """Graph elements first, then single-vertex elements; all pairwise disjoint."""

    pieces: tuple[Graph, ...]
    singletons: tuple[int, ...]
    k: int
    verify: bool = field(default=True, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "pieces", tuple(self.pieces))
        object.__setattr__(self, "singletons", tuple(self.singletons))
        seen: set[int] = set()
        for vs in self.vertex_sets():
            if seen & vs:
                raise ValueError(f"elements overlap on {sorted(seen & vs)}")
            seen |= vs
        if self.verify:
            for i, p in enumerate(self.pieces):
                if not is_k_connected(p, self.k):
                    raise ValueError(f"piece {i} is not {self.k}-connected")

    def __len__(self) -> int:
        return len(self.pieces) + len(self.singletons)

    @property
    def t(self) -> int:
        return len(self.pieces)

    def vertex_sets(self) -> list[frozenset[int]]:
        return [p.vertices for p in self.pieces] + [frozenset((u,)) for u in self.singletons]

    def ground(self) -> frozenset[int]:
        return frozenset().union(*self.vertex_sets()) if len(self) else frozenset()

    def element_of(self) -> dict[int, int]:
        return {v: i for i, vs in enumerate(self.vertex_sets()) for v in vs}


@dataclass(frozen=True)
class PatternGraph:
    """A k-connected graph R on the element indices ``0..t+s-1``."""

    graph: Graph
    k: int

    def __post_init__(self):
        if self.graph.vertices != frozenset(range(self.graph.n)):
            raise ValueError("pattern graph must live on 0..t+s-1")
        if not is_k_connected(self.graph, self.k):
            raise ValueError(f"pattern graph is not {self.k}-connected")


@dataclass(frozen=True)
class FamilyMembershipReport:
    condition_i: bool
    condition_ii: tuple[Edge, ...]
    condition_iii: dict[int, int]

    @property
    def all_clear(self) -> bool:
        return self.condition_i and not self.condition_ii and not self.condition_iii


def join_two(g1: Graph, g2: Graph, bridge: Iterable[Edge], k: int) -> Graph:
    """Union of two disjoint k-connected graphs plus >= k independent edges between them."""
    if g1.vertices & g2.vertices:
        raise ValueError("the two graphs must be vertex-disjoint")
    bridge = Matching(frozenset(bridge))
    if len(bridge) < k:
        raise ValueError(f"need at least {k} bridge edges, got {len(bridge)}")
    for u, v in bridge:
        if not ((u in g1 and v in g2) or (u in g2 and v in g1)):
            raise ValueError(f"bridge edge ({u}, {v}) must join the two graphs")
    for i, h in enumerate((g1, g2), start=1):
        if not is_k_connected(h, k):
            raise ValueError(f"graph {i} is not {k}-connected")
    joined = Graph(g1.vertices | g2.vertices, [*g1.edges, *g2.edges, *bridge.edges])
    if not is_k_connected(joined, k):
        raise InvariantError("joined graph is not k-connected")
    return joined


def _element_links(g: Graph, elem: dict[int, int]) -> set[tuple[int, int]]:
    links = set()
    for u, v in g.edges:
        a, b = elem[u], elem[v]
        if a != b:
            links.add((min(a, b), max(a, b)))
    return links


def _escape_matching(piece: frozenset[int], i: int, edges: Iterable[Edge],
                     elem: dict[int, int]) -> dict[int, int]:
    """Max matching of piece vertices to distinct other elements along ``edges``."""
    adj: dict[int, set[int]] = {}
    for u, v in edges:
        for a, b in ((u, v), (v, u)):
            if a in piece and elem[b] != i:
                adj.setdefault(a, set()).add(elem[b])
    return hopcroft_karp(sorted(adj), adj)


def check_family_membership(g: Graph, x: PieceTuple, r: PatternGraph,
                            k: int) -> FamilyMembershipReport:
    """Evaluate conditions (i)-(iii) for ``g``."""
    if x.ground() != g.vertices:
        raise ValueError("elements of X do not partition the vertex set of g")
    if r.graph.n != len(x):
        raise ValueError("pattern graph must have one vertex per element of X")
    elem = x.element_of()
    cond_i = all(g.has_edge(u, v) for p in x.pieces for u, v in p.edges)
    links = _element_links(g, elem)
    missing = tuple(sorted(e for e in r.graph.edges if e not in links))
    deficit = {}
    for i, p in enumerate(x.pieces):
        size = len(_escape_matching(p.vertices, i, g.edges, elem))
        if size < k:
            deficit[i] = size
    return FamilyMembershipReport(cond_i, missing, deficit)


def merge_components(x: PieceTuple, r: PatternGraph, available_edges: Iterable[Edge],
                     k: int) -> Graph:
    """Smallish member of the family built from X plus a selection of ``available_edges``.

    Edges for (ii) are chosen first, one per pattern edge; (iii) is then
    topped up from a maximum matching.  The result is re-verified.
    """
    elem = x.element_of()
    avail_set = {edge_key(u, v) for u, v in available_edges}
    available = sorted(avail_set)
    for u, v in available:
        if u not in elem or v not in elem or elem[u] == elem[v]:
            raise ValueError(f"available edge ({u}, {v}) does not join two distinct elements")
    by_pair: dict[tuple[int, int], list[Edge]] = {}
    for u, v in available:
        a, b = elem[u], elem[v]
        by_pair.setdefault((min(a, b), max(a, b)), []).append((u, v))

    chosen: set[Edge] = set()
    for i, j in sorted(r.graph.edges):
        options = by_pair.get((i, j))
        if not options:
            raise MergeError("ii", f"no available edge between elements {i} and {j}")
        chosen.add(options[0])

    for i, p in enumerate(x.pieces):
        if len(_escape_matching(p.vertices, i, chosen, elem)) >= k:
            continue
        mate = _escape_matching(p.vertices, i, available, elem)
        if len(mate) < k:
            raise MergeError("iii", f"piece {i} reaches only {len(mate)} distinct elements "
                                    f"through independent edges")
        for v, j in sorted(mate.items())[:k]:
            w = min(w for w in sorted(x.vertex_sets()[j]) if edge_key(v, w) in avail_set)
            chosen.add(edge_key(v, w))

    edges = [e for p in x.pieces for e in p.edges] + sorted(chosen)
    g = Graph(x.ground(), edges)
    report = check_family_membership(g, x, r, k)
    if not report.all_clear:
        raise InvariantError(f"assembled graph fails membership: {report}")
    kappa_ok = (oracle.brute_kappa(g) >= k if g.n <= oracle.BRUTE_KAPPA_MAX_N
                else bool(is_k_connected(g, k)))
    if not kappa_ok:
        raise InvariantError("assembled family member is not k-connected")
    return g


def pattern_from_links(n_elements: int, links: Sequence[tuple[int, int]], k: int) -> PatternGraph:
    return PatternGraph(Graph.from_edges(n_elements, links), k)
