"""Exact connectivity measurements.

Vertex connectivity, local vertex connectivity and k-connectivity tests run
unit-vertex-capacity max-flow on the usual split network (every vertex ``v``
becomes ``v_in -> v_out`` with capacity one).  Edge connectivity uses
unit-capacity flow on the graph itself.  Maximum bipartite matching is
Hopcroft-Karp; the vertex cover produced alongside it certifies optimality
by Konig's theorem.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Hashable, Iterable, Mapping, Sequence

from .graph import Bipartition, Edge, EdgeCut, Graph, edge_cut, edge_key


@dataclass(frozen=True)
class VertexCutWitness:
    """``cut`` disconnects the graph and ``side_small`` is a component of the rest."""

    cut: frozenset[int]
    side_small: frozenset[int]


@dataclass(frozen=True)
class Matching:
    edges: frozenset[Edge]

    def __post_init__(self):
        edges = frozenset(edge_key(u, v) for u, v in self.edges)
        object.__setattr__(self, "edges", edges)
        seen: set[int] = set()
        for u, v in edges:
            if u in seen or v in seen:
                raise ValueError(f"edge ({u}, {v}) shares an endpoint with another matching edge")
            seen.update((u, v))

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self):
        return iter(sorted(self.edges))

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(x for e in self.edges for x in e)


@dataclass(frozen=True)
class VertexCover:
    cover: frozenset[int]

    def __len__(self) -> int:
        return len(self.cover)

    def covers(self, edges: Iterable[Edge]) -> bool:
        return all(u in self.cover or v in self.cover for u, v in edges)


@dataclass(frozen=True)
class KConnectivity:
    """Outcome of a k-connectivity test; truthy iff the graph is k-connected.

    When false, ``witness`` holds a separator of size < k, unless the graph
    simply has too few vertices (``n <= k``), in which case it is None.
    """

    connected: bool
    witness: VertexCutWitness | None = None

    def __bool__(self) -> bool:
        return self.connected


class _FlowNetwork:
    """Residual network stored as parallel arc arrays; arc ``a ^ 1`` is the reverse of ``a``."""

    def __init__(self, node_count: int):
        self.head: list[int] = []
        self.base: list[int] = []
        self.out: list[list[int]] = [[] for _ in range(node_count)]

    def add_arc(self, u: int, v: int, cap: int, rev_cap: int = 0) -> int:
        a = len(self.head)
        self.head += (v, u)
        self.base += (cap, rev_cap)
        self.out[u].append(a)
        self.out[v].append(a + 1)
        return a

    def max_flow(self, s: int, t: int, limit: int, cap: list[int]) -> int:
        """Augment along shortest paths until ``limit`` is reached; mutates ``cap``."""
        head, out = self.head, self.out
        flow = 0
        while flow < limit:
            parent_arc = {s: -1}
            queue = deque([s])
            found = False
            while queue and not found:
                u = queue.popleft()
                for a in out[u]:
                    if cap[a] > 0:
                        w = head[a]
                        if w not in parent_arc:
                            parent_arc[w] = a
                            if w == t:
                                found = True
                                break
                            queue.append(w)
            if not found:
                break
            push = limit - flow
            w = t
            while w != s:
                a = parent_arc[w]
                push = min(push, cap[a])
                w = head[a ^ 1]
            w = t
            while w != s:
                a = parent_arc[w]
                cap[a] -= push
                cap[a ^ 1] += push
                w = head[a ^ 1]
            flow += push
        return flow

    def reachable(self, s: int, cap: list[int]) -> set[int]:
        head, out = self.head, self.out
        seen = {s}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for a in out[u]:
                if cap[a] > 0 and head[a] not in seen:
                    seen.add(head[a])
                    queue.append(head[a])
        return seen


class _SplitNetwork:
    """Vertex-split flow network of an undirected graph plus one super source."""

    def __init__(self, g: Graph):
        self.g = g
        self.order = g.vertex_list()
        self.index = {v: i for i, v in enumerate(self.order)}
        n = len(self.order)
        big = n + 1
        self.source = 2 * n
        net = _FlowNetwork(2 * n + 1)
        for i in range(n):
            net.add_arc(2 * i, 2 * i + 1, 1)
        self.edge_arc: dict[tuple[int, int], int] = {}
        for u, v in g.sorted_edges():
            iu, iv = self.index[u], self.index[v]
            self.edge_arc[(u, v)] = net.add_arc(2 * iu + 1, 2 * iv, big)
            self.edge_arc[(v, u)] = net.add_arc(2 * iv + 1, 2 * iu, big)
        self.source_arc = [net.add_arc(self.source, 2 * i, 0) for i in range(n)]
        self.net = net

    def local(self, s: int, t: int, limit: int,
              drop_edge: bool = False) -> tuple[int, list[int]]:
        """Flow from ``s`` to ``t`` through internally disjoint paths.

        ``s`` and ``t`` must be non-adjacent unless ``drop_edge`` removes the
        edge ``st`` for this query.
        """
        cap = list(self.net.base)
        if drop_edge:
            cap[self.edge_arc[(s, t)]] = 0
            cap[self.edge_arc[(t, s)]] = 0
        src = 2 * self.index[s] + 1
        value = self.net.max_flow(src, 2 * self.index[t], limit, cap)
        return value, cap

    def fan(self, sources: Iterable[int], t: int, limit: int) -> tuple[int, list[int]]:
        """Flow from a super source attached to ``sources`` into ``t``."""
        cap = list(self.net.base)
        for v in sources:
            cap[self.source_arc[self.index[v]]] = 1
        value = self.net.max_flow(self.source, 2 * self.index[t], limit, cap)
        return value, cap

    def cut_from(self, origin: int, cap: list[int]) -> frozenset[int]:
        """Vertices whose split arc (or super-source arc) crosses the residual min cut."""
        reach = self.net.reachable(origin, cap)
        cut = set()
        for i, v in enumerate(self.order):
            if 2 * i in reach and 2 * i + 1 not in reach:
                cut.add(v)
        if origin == self.source:
            for i, v in enumerate(self.order):
                a = self.source_arc[i]
                # saturated source arcs into unreachable vertices are cut too
                if cap[a ^ 1] > 0 and 2 * i not in reach:
                    cut.add(v)
        return frozenset(cut)

    def paths(self, s: int, t: int, cap: list[int]) -> list[list[int]]:
        """Decompose the flow left in ``cap`` into vertex paths from s to t."""
        net = self.net
        used = [net.base[a] - cap[a] if a % 2 == 0 else 0 for a in range(len(cap))]
        sink = 2 * self.index[t]
        result = []
        for a0 in net.out[2 * self.index[s] + 1]:
            if a0 % 2 or used[a0] <= 0:
                continue
            used[a0] -= 1
            path = [s]
            node = net.head[a0]
            while node != sink:
                # node is some v_in: take its split arc, then a used edge arc
                path.append(self.order[node // 2])
                out_node = node + 1
                nxt = next(a for a in net.out[out_node] if a % 2 == 0 and used[a] > 0)
                used[nxt] -= 1
                node = net.head[nxt]
            path.append(t)
            result.append(path)
        return result


def _witness(g: Graph, cut: Iterable[int]) -> VertexCutWitness:
    cut = frozenset(cut)
    comps = g.components(removed=cut)
    if len(comps) < 2:
        raise AssertionError(f"claimed separator {sorted(cut)} does not disconnect the graph")
    return VertexCutWitness(cut, comps[0])


def is_complete(g: Graph) -> bool:
    n = g.n
    return all(len(g.neighbors(v)) == n - 1 for v in g.vertices)


def st_disjoint_paths(g: Graph, s: int, t: int) -> tuple[int, list[list[int]]]:
    """Maximum number of internally vertex-disjoint s-t paths, with a witness family.

    A direct edge ``st`` counts as one of the paths.
    """
    if s == t:
        raise ValueError("s and t must be distinct")
    if s not in g or t not in g:
        raise ValueError("s and t must be vertices of the graph")
    adjacent = g.has_edge(s, t)
    if adjacent:
        g = g.spanning(e for e in g.edges if e != edge_key(s, t))
    net = _SplitNetwork(g)
    value, cap = net.local(s, t, g.n)
    paths = net.paths(s, t, cap)
    if adjacent:
        paths.insert(0, [s, t])
        value += 1
    return value, paths


def local_vertex_connectivity(g: Graph, s: int, t: int) -> tuple[int, frozenset[int]]:
    """Minimum size of a vertex set separating non-adjacent ``s`` and ``t``, with that set."""
    if s == t or g.has_edge(s, t):
        raise ValueError("s and t must be distinct and non-adjacent")
    net = _SplitNetwork(g)
    value, cap = net.local(s, t, g.n)
    return value, net.cut_from(2 * net.index[s] + 1, cap)


def vertex_connectivity(g: Graph) -> tuple[int, VertexCutWitness | None]:
    """Exact kappa(g) and a minimum separator (None for complete graphs).

    Disconnected graphs give 0 with an empty cut; the one-vertex graph gives 0.
    """
    n = g.n
    if n == 0:
        raise ValueError("vertex connectivity of the empty graph is undefined")
    if n == 1:
        return 0, None
    comps = g.components()
    if len(comps) > 1:
        return 0, VertexCutWitness(frozenset(), comps[0])
    if is_complete(g):
        return n - 1, None
    # one low-degree root against its non-neighbors, plus non-adjacent pairs of its neighbors
    root = min(g.vertex_list(), key=g.degree)
    best = g.degree(root)
    best_cut = g.neighbors(root)
    net = _SplitNetwork(g)
    nbrs = sorted(g.neighbors(root))
    pairs = [(root, w) for w in g.vertex_list() if w != root and not g.has_edge(root, w)]
    pairs += [(x, y) for x, y in combinations(nbrs, 2) if not g.has_edge(x, y)]
    for s, t in pairs:
        if best == 1:
            break
        value, cap = net.local(s, t, best)
        if value < best:
            best = value
            best_cut = net.cut_from(2 * net.index[s] + 1, cap)
    return best, _witness(g, best_cut)


def is_k_connected(g: Graph, k: int) -> KConnectivity:
    """Test kappa(g) >= k with about n max-flow calls, each stopped after k paths.

    Vertices ``v_1..v_n`` in increasing order: g is k-connected iff every pair
    among ``v_1..v_k`` has k internally disjoint paths and each later ``v_j``
    has k disjoint paths from the set ``{v_1..v_{j-1}}``.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    n = g.n
    if n <= k:
        return KConnectivity(False)
    if k == 0:
        return KConnectivity(True)
    comps = g.components()
    if len(comps) > 1:
        return KConnectivity(False, VertexCutWitness(frozenset(), comps[0]))
    if k == 1:
        return KConnectivity(True)
    low = min(g.vertex_list(), key=g.degree)
    if g.degree(low) < k:
        return KConnectivity(False, _witness(g, g.neighbors(low)))

    net = _SplitNetwork(g)
    order = net.order
    for i, j in combinations(range(k), 2):
        s, t = order[i], order[j]
        if g.has_edge(s, t):
            value, cap = net.local(s, t, k - 1, drop_edge=True)
            if value < k - 1:
                cut = net.cut_from(2 * i + 1, cap)
                for extra in (s, t):
                    if len(g.components(removed=cut | {extra})) > 1:
                        return KConnectivity(False, _witness(g, cut | {extra}))
                raise AssertionError("no separator derived from a deficient adjacent pair")
        else:
            value, cap = net.local(s, t, k)
            if value < k:
                return KConnectivity(False, _witness(g, net.cut_from(2 * i + 1, cap)))
    for j in range(k, n):
        value, cap = net.fan(order[:j], order[j], k)
        if value < k:
            return KConnectivity(False, _witness(g, net.cut_from(net.source, cap)))
    return KConnectivity(True)


def edge_connectivity(g: Graph) -> tuple[int, EdgeCut]:
    """Exact lambda(g) and a minimum edge cut."""
    n = g.n
    if n < 2:
        raise ValueError("edge connectivity needs at least two vertices")
    comps = g.components()
    if len(comps) > 1:
        return 0, edge_cut(g, comps[0])
    order = g.vertex_list()
    index = {v: i for i, v in enumerate(order)}
    net = _FlowNetwork(n)
    for u, v in g.sorted_edges():
        net.add_arc(index[u], index[v], 1, 1)
    low = min(order, key=g.degree)
    best = g.degree(low)
    best_side: frozenset[int] = frozenset({low})
    s = order[0]
    for t in order[1:]:
        if best == 0:
            break
        cap = list(net.base)
        value = net.max_flow(index[s], index[t], best, cap)
        if value < best:
            best = value
            best_side = frozenset(order[i] for i in net.reachable(index[s], cap))
    return best, edge_cut(g, best_side)


def hopcroft_karp(left: Sequence[Hashable],
                  adj: Mapping[Hashable, Iterable[Hashable]]) -> dict:
    """Maximum matching of a bipartite graph given by left-side adjacency.

    Returns a dict mapping matched left vertices to their partners.  Left and
    right vertex names live in separate namespaces.
    """
    inf = float("inf")
    nbrs = {u: sorted(adj.get(u, ()), key=_order_key) for u in left}
    mate_l: dict = {}
    mate_r: dict = {}
    while True:
        dist: dict = {}
        queue = deque()
        for u in left:
            if u not in mate_l:
                dist[u] = 0
                queue.append(u)
        reach_free = inf
        while queue:
            u = queue.popleft()
            if dist[u] >= reach_free:
                continue
            for w in nbrs[u]:
                x = mate_r.get(w)
                if x is None:
                    reach_free = min(reach_free, dist[u] + 1)
                elif x not in dist:
                    dist[x] = dist[u] + 1
                    queue.append(x)
        if reach_free == inf:
            break
        pos = {u: 0 for u in left}

        def augment(u) -> bool:
            # iterative DFS along the layered graph
            stack = [u]
            trail = []
            while stack:
                x = stack[-1]
                lst = nbrs[x]
                advanced = False
                while pos[x] < len(lst):
                    w = lst[pos[x]]
                    pos[x] += 1
                    y = mate_r.get(w)
                    if y is None:
                        if dist[x] + 1 == reach_free:
                            trail.append((x, w))
                            for a, b in trail:
                                mate_l[a] = b
                                mate_r[b] = a
                            return True
                    elif dist.get(y) == dist[x] + 1:
                        trail.append((x, w))
                        stack.append(y)
                        advanced = True
                        break
                if not advanced:
                    stack.pop()
                    dist[x] = inf
                    if trail:
                        trail.pop()
            return False

        progress = False
        for u in left:
            if u not in mate_l and augment(u):
                progress = True
        if not progress:
            break
    return mate_l


def _order_key(x):
    return (type(x).__name__, x)


def konig_cover(left: Sequence[Hashable], adj: Mapping[Hashable, Iterable[Hashable]],
                mate_l: Mapping) -> tuple[set, set]:
    """Minimum vertex cover from a maximum matching: (left part, right part)."""
    mate_r = {w: u for u, w in mate_l.items()}
    z_left = {u for u in left if u not in mate_l}
    z_right: set = set()
    queue = deque(z_left)
    while queue:
        u = queue.popleft()
        for w in adj.get(u, ()):
            if w in z_right or mate_l.get(u) == w:
                continue
            z_right.add(w)
            x = mate_r.get(w)
            if x is not None and x not in z_left:
                z_left.add(x)
                queue.append(x)
    return {u for u in left if u not in z_left}, z_right


def max_bipartite_matching(g: Graph, p: Bipartition) -> tuple[Matching, VertexCover]:
    """Maximum matching of bipartite ``g`` and a vertex cover of equal size."""
    if p.ground != g.vertices:
        raise ValueError("bipartition does not partition the vertex set")
    for u, v in g.edges:
        if not p.crosses(u, v):
            raise ValueError(f"edge ({u}, {v}) lies inside one side")
    left = sorted(p.side_a)
    adj = {u: g.neighbors(u) for u in left}
    mate = hopcroft_karp(left, adj)
    cover_l, cover_r = konig_cover(left, adj, mate)
    matching = Matching(frozenset(edge_key(u, w) for u, w in mate.items()))
    cover = VertexCover(frozenset(cover_l) | frozenset(cover_r))
    if len(matching) != len(cover) or not cover.covers(g.edges):
        raise AssertionError("Konig certificate failed")
    return matching, cover
