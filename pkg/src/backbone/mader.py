"""Dense graphs contain highly connected subgraphs.

``dense_k_connected_subgraph`` is a constructive descent for graphs of
average degree at least 4l.  With ``gamma = |E(G)| / |V(G)|`` (at least 2l)
it keeps a candidate H satisfying

    |H| >= 2l   and   |E(H)| > gamma * (|H| - l)

and shrinks it: a vertex of degree <= gamma can be deleted, and otherwise a
separator S with |S| < l splits H into overlapping parts C + S and H - C,
one of which still satisfies the inequality.  A candidate with no such
vertex and no such separator is l-connected.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bipartize import local_max_cut
from .connectivity import is_k_connected
from .errors import InvariantError, PreconditionError
from .graph import Bipartition, Graph, average_degree, cross_subgraph


@dataclass(frozen=True)
class DenseWitness:
    """A verified l-connected subgraph.

    ``verified_kappa`` is the connectivity level that was re-checked, and
    ``trace`` lists the candidate's vertex count after every descent step.
    """

    subgraph_vertices: frozenset[int]
    verified_kappa: int
    subgraph: Graph
    trace: tuple[int, ...] = ()


def _satisfies(h: Graph, gamma: Fraction, ell: int) -> bool:
    return h.n >= 2 * ell and h.m > gamma * (h.n - ell)


def _descend(g: Graph, ell: int) -> DenseWitness:
    gamma = Fraction(g.m, g.n)
    h = g
    trace = [h.n]
    if not _satisfies(h, gamma, ell):
        raise InvariantError("starting graph does not satisfy the edge bound")
    while True:
        low = min(h.vertex_list(), key=h.degree)
        if h.degree(low) <= gamma:
            h = h.without((low,))
        else:
            check = is_k_connected(h, ell)
            if check:
                break
            w = check.witness
            if w is None:
                raise InvariantError(f"candidate on {h.n} vertices is too small to split")
            small = w.side_small
            parts = [h.induced(small | w.cut), h.without(small)]
            good = [p for p in parts if _satisfies(p, gamma, ell)]
            if not good:
                raise InvariantError(
                    f"neither side of separator {sorted(w.cut)} keeps the edge bound")
            h = min(good, key=lambda p: (p.n, p.vertex_list()))
        if h.n >= trace[-1]:
            raise InvariantError("descent step did not shrink the candidate")
        if not _satisfies(h, gamma, ell):
            raise InvariantError("descent step broke the edge bound")
        trace.append(h.n)
    if not is_k_connected(h, ell):
        raise InvariantError("witness failed re-verification")
    return DenseWitness(h.vertices, ell, h, tuple(trace))


def dense_k_connected_subgraph(g: Graph, ell: int) -> DenseWitness:
    """An ell-connected subgraph of a graph with average degree >= 4 * ell."""
    if ell < 1:
        raise PreconditionError("ell must be at least 1")
    if g.n == 0 or average_degree(g) < 4 * ell:
        raise PreconditionError(f"average degree must be at least {4 * ell}")
    return _descend(g, ell)


def bipartite_dense_k_connected_subgraph(g: Graph, ell: int,
                                         seed: int = 0) -> tuple[DenseWitness, Bipartition]:
    """A bipartite ell-connected subgraph of a graph with average degree >= 8 * ell.

    A locally maximal cut keeps at least half of the edges, so the cross
    subgraph still has average degree >= 4 * ell.  A graph that is already
    bipartite keeps all of its edges and only needs average degree 4 * ell.
    """
    if ell < 1:
        raise PreconditionError("ell must be at least 1")
    coloring = g.two_coloring() if g.n else None
    need = 4 * ell if coloring is not None else 8 * ell
    if g.n == 0 or average_degree(g) < need:
        raise PreconditionError(f"average degree must be at least {need}")
    partition = coloring if coloring is not None else local_max_cut(g, seed).partition
    h = cross_subgraph(g, partition)
    if average_degree(h) < 4 * ell:
        raise InvariantError("cross subgraph lost more than half of the edges")
    witness = _descend(h, ell)
    part = Bipartition(partition.side_a & witness.subgraph_vertices,
                       partition.side_b & witness.subgraph_vertices)
    return witness, part


def k_core(g: Graph, k: int) -> Graph:
    """Largest induced subgraph of minimum degree >= k (possibly empty)."""
    deg = {v: g.degree(v) for v in g.vertex_list()}
    gone: set[int] = set()
    stack = [v for v, d in deg.items() if d < k]
    gone.update(stack)
    while stack:
        v = stack.pop()
        for w in g.neighbors(v):
            if w not in gone:
                deg[w] -= 1
                if deg[w] < k:
                    gone.add(w)
                    stack.append(w)
    return g.without(gone) if gone else g


def largest_k_connected_subgraph(g: Graph, k: int) -> Graph | None:
    """A maximum-order k-connected subgraph of ``g`` (induced), or None if there is none.

    Every k-connected subgraph survives the k-core and, after a separator S
    of size < k is removed, stays inside one component C; so searching each
    ``C + S`` recursively misses nothing.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    best: Graph | None = None
    seen: set[frozenset[int]] = set()
    stack = [g]
    while stack:
        h = k_core(stack.pop(), k)
        if h.n <= k or h.vertices in seen:
            continue
        if best is not None and h.n <= best.n:
            continue
        seen.add(h.vertices)
        check = is_k_connected(h, k)
        if check:
            best = h
            continue
        cut = check.witness.cut
        for comp in h.components(removed=cut):
            stack.append(h.induced(comp | cut))
    return best
