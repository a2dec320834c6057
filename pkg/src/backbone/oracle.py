"""Brute-force ground truth for small graphs and seeded instance generators.

Nothing here calls into the flow-based code in ``connectivity``; the
exhaustive routines work on bitmasks so they stay an independent check.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Any, Mapping

from .graph import Bipartition, Graph

BRUTE_KAPPA_MAX_N = 14
BIPARTITION_SEARCH_MAX_N = 18

FAMILIES = ("gnp", "complete", "complete_bipartite", "hypercube",
            "random_regular", "two_blobs_bridged", "tree")


def _masks(g: Graph) -> tuple[tuple[int, ...], list[int]]:
    order = g.vertex_list()
    index = {v: i for i, v in enumerate(order)}
    adj = [0] * len(order)
    for u, v in g.edges:
        adj[index[u]] |= 1 << index[v]
        adj[index[v]] |= 1 << index[u]
    return order, adj


def _connected(adj: list[int], alive: int) -> bool:
    if alive == 0:
        return True
    reach = alive & -alive
    frontier = reach
    while frontier:
        nxt = 0
        while frontier:
            low = frontier & -frontier
            nxt |= adj[low.bit_length() - 1]
            frontier ^= low
        nxt &= alive & ~reach
        reach |= nxt
        frontier = nxt
    return reach == alive


def _has_small_separator(adj: list[int], n: int, size_below: int) -> bool:
    full = (1 << n) - 1
    for size in range(size_below):
        for removed in combinations(range(n), size):
            mask = full
            for i in removed:
                mask &= ~(1 << i)
            if not _connected(adj, mask):
                return True
    return False


def brute_kappa(g: Graph) -> int:
    """Vertex connectivity by trying every vertex subset in order of size."""
    n = g.n
    if n == 0:
        raise ValueError("vertex connectivity of the empty graph is undefined")
    if n > BRUTE_KAPPA_MAX_N:
        raise ValueError(f"brute_kappa is limited to n <= {BRUTE_KAPPA_MAX_N}, got {n}")
    _, adj = _masks(g)
    full = (1 << n) - 1
    for size in range(n - 1):
        for removed in combinations(range(n), size):
            mask = full
            for i in removed:
                mask &= ~(1 << i)
            if not _connected(adj, mask):
                return size
    return n - 1


def brute_is_k_connected(g: Graph, k: int) -> bool:
    if g.n <= k:
        return False
    _, adj = _masks(g)
    return not _has_small_separator(adj, g.n, k)


def brute_min_separator(g: Graph, s: int, t: int) -> int:
    """Smallest vertex set (avoiding s, t) whose removal separates non-adjacent s and t."""
    if s == t or g.has_edge(s, t):
        raise ValueError("s and t must be distinct and non-adjacent")
    order, adj = _masks(g)
    index = {v: i for i, v in enumerate(order)}
    si, ti = index[s], index[t]
    others = [i for i in range(len(order)) if i not in (si, ti)]
    full = (1 << len(order)) - 1
    for size in range(len(others) + 1):
        for removed in combinations(others, size):
            mask = full
            for i in removed:
                mask &= ~(1 << i)
            # reach from s inside the survivors
            reach = 1 << si
            frontier = reach
            while frontier:
                nxt = 0
                while frontier:
                    low = frontier & -frontier
                    nxt |= adj[low.bit_length() - 1]
                    frontier ^= low
                nxt &= mask & ~reach
                reach |= nxt
                frontier = nxt
            if not reach >> ti & 1:
                return size
    raise AssertionError("unreachable: removing all other vertices separates s and t")


def exists_spanning_bipartite_k_connected(g: Graph, k: int) -> tuple[bool, Bipartition | None]:
    """Decide whether some bipartition makes the cross subgraph k-connected.

    The full cross subgraph is the best spanning bipartite subgraph for a
    fixed bipartition (extra edges never lower connectivity), so scanning all
    bipartitions with the smallest vertex pinned to side A is exact.  The
    first witness in increasing mask order is returned.
    """
    n = g.n
    if n > BIPARTITION_SEARCH_MAX_N:
        raise ValueError(f"bipartition search is limited to n <= {BIPARTITION_SEARCH_MAX_N}, got {n}")
    if n <= k or n == 0:
        return False, None
    order, adj = _masks(g)
    full = (1 << n) - 1
    for mask in range(1 << (n - 1)):
        side_b = mask << 1
        side_a = full & ~side_b
        cross = [adj[i] & (side_a if side_b >> i & 1 else side_b) for i in range(n)]
        if any(bin(c).count("1") < k for c in cross):
            continue
        if not _has_small_separator(cross, n, k):
            a = frozenset(order[i] for i in range(n) if side_a >> i & 1)
            return True, Bipartition(a, frozenset(order) - a)
    return False, None


# -- generators ------------------------------------------------------------


@dataclass(frozen=True)
class GeneratorSpec:
    family: str
    parameters: Mapping[str, Any] = field(default_factory=dict)
    seed: int = 0

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; expected one of {FAMILIES}")


def gnp(n: int, p, seed: int = 0) -> Graph:
    p = Fraction(p) if not isinstance(p, float) else p
    if not 0 <= p <= 1:
        raise ValueError(f"edge probability must lie in [0, 1], got {p}")
    if n < 0:
        raise ValueError("n must be non-negative")
    rng = random.Random(seed)
    pf = float(p)
    return Graph.from_edges(n, [(u, v) for u, v in combinations(range(n), 2) if rng.random() < pf])


def complete(n: int) -> Graph:
    if n < 0:
        raise ValueError("n must be non-negative")
    return Graph.from_edges(n, combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 0 or b < 0:
        raise ValueError("part sizes must be non-negative")
    return Graph.from_edges(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def hypercube(d: int) -> Graph:
    if d < 0:
        raise ValueError("dimension must be non-negative")
    n = 1 << d
    return Graph.from_edges(n, [(v, v ^ (1 << i)) for v in range(n) for i in range(d) if v < v ^ (1 << i)])


def harary(k: int, n: int, offset: int = 0) -> Graph:
    """The Harary graph H(k, n): k-connected with the fewest edges (k < n)."""
    if not 1 <= k < n:
        raise ValueError("need 1 <= k < n")
    edges = set()
    half = k // 2
    for i in range(n):
        for j in range(1, half + 1):
            edges.add(frozenset((i, (i + j) % n)))
    if k % 2:
        if n % 2 == 0:
            for i in range(n // 2):
                edges.add(frozenset((i, i + n // 2)))
        else:
            edges.add(frozenset((0, (n - 1) // 2)))
            for i in range((n + 1) // 2):
                edges.add(frozenset((i, (i + (n + 1) // 2) % n)))
    pairs = [tuple(sorted(e)) for e in edges if len(e) == 2]
    return Graph(range(offset, offset + n), [(u + offset, v + offset) for u, v in pairs])


def _legal(free: list[int], edges: set[tuple[int, int]], i: int, j: int) -> bool:
    u, v = free[i], free[j]
    return u != v and (min(u, v), max(u, v)) not in edges


def random_regular(n: int, d: int, seed: int = 0, max_tries: int = 10_000) -> Graph:
    """Uniform-ish d-regular graph by the pairing model, rejecting loops and multi-edges."""
    if d < 0 or n < 0 or (n > 0 and d >= n) or (n * d) % 2:
        raise ValueError(f"no simple {d}-regular graph on {n} vertices")
    if 2 * d > n - 1:
        # dense case: pair up the complement instead, rejection is hopeless otherwise
        sparse = random_regular(n, n - 1 - d, seed, max_tries)
        return Graph.from_edges(n, [(u, v) for u, v in combinations(range(n), 2)
                                    if not sparse.has_edge(u, v)])
    rng = random.Random(seed)
    for _ in range(max_tries):
        # pair points one at a time, rejecting a pair that would make a loop or
        # a multi-edge; restart only when no legal pair is left
        free = [v for v in range(n) for _ in range(d)]
        edges: set[tuple[int, int]] = set()
        while free:
            pair = None
            for _ in range(50):
                i, j = sorted(rng.sample(range(len(free)), 2))
                if _legal(free, edges, i, j):
                    pair = (i, j)
                    break
            if pair is None:
                legal = [(i, j) for i in range(len(free)) for j in range(i + 1, len(free))
                         if _legal(free, edges, i, j)]
                if not legal:
                    break
                pair = rng.choice(legal)
            i, j = pair
            u, v = free[i], free[j]
            edges.add((min(u, v), max(u, v)))
            del free[j], free[i]
        if not free:
            return Graph.from_edges(n, edges)
    raise RuntimeError(f"pairing model did not produce a simple graph in {max_tries} tries")


def two_blobs_bridged(blob_size: int, k: int, bridge: int, seed: int = 0,
                      density=Fraction(1, 3)) -> Graph:
    """Two disjoint k-connected blobs joined by ``bridge`` independent edges.

    Each blob is a Harary graph H(k, blob_size) plus random chords with
    probability ``density``.
    """
    if bridge > blob_size or bridge < 0:
        raise ValueError("bridge size must be between 0 and the blob size")
    rng = random.Random(seed)
    edges = []
    for offset in (0, blob_size):
        edges.extend(harary(k, blob_size, offset).edges)
        for u, v in combinations(range(offset, offset + blob_size), 2):
            if rng.random() < float(density):
                edges.append((u, v))
    left = rng.sample(range(blob_size), bridge)
    right = rng.sample(range(blob_size, 2 * blob_size), bridge)
    edges.extend(zip(left, right))
    return Graph.from_edges(2 * blob_size, edges)


def tree(n: int, seed: int = 0) -> Graph:
    """Random recursive tree: vertex i attaches to a uniform earlier vertex."""
    if n < 0:
        raise ValueError("n must be non-negative")
    rng = random.Random(seed)
    return Graph.from_edges(n, [(rng.randrange(i), i) for i in range(1, n)])


def generate(spec: GeneratorSpec) -> Graph:
    """Deterministic instance for ``spec``; family invariants are checked before returning."""
    p = dict(spec.parameters)
    fam = spec.family
    try:
        if fam == "gnp":
            g = gnp(p["n"], p["p"], spec.seed)
        elif fam == "complete":
            g = complete(p["n"])
        elif fam == "complete_bipartite":
            g = complete_bipartite(p["a"], p["b"])
        elif fam == "hypercube":
            g = hypercube(p["d"])
        elif fam == "random_regular":
            g = random_regular(p["n"], p["d"], spec.seed)
        elif fam == "two_blobs_bridged":
            g = two_blobs_bridged(p["blob_size"], p["k"], p["bridge"], spec.seed,
                                  p.get("density", Fraction(1, 3)))
        else:
            g = tree(p["n"], spec.seed)
    except KeyError as exc:
        raise ValueError(f"family {fam!r} needs parameter {exc.args[0]!r}") from None
    _check_family(g, spec)
    return g


def _check_family(g: Graph, spec: GeneratorSpec) -> None:
    p = spec.parameters
    fam = spec.family
    if fam == "complete":
        assert g.m == g.n * (g.n - 1) // 2
    elif fam in ("complete_bipartite", "hypercube"):
        assert g.is_bipartite()
        if fam == "hypercube":
            assert all(g.degree(v) == p["d"] for v in g)
    elif fam == "random_regular":
        assert all(g.degree(v) == p["d"] for v in g)
    elif fam == "tree":
        assert g.m == max(g.n - 1, 0) and g.is_connected()
    elif fam == "two_blobs_bridged":
        from .connectivity import is_k_connected

        m = p["blob_size"]
        for blob in (range(m), range(m, 2 * m)):
            assert is_k_connected(g.induced(blob), p["k"]), "blob lost its connectivity"


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return Graph.from_edges(10, outer + inner + spokes)


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def random_small_graph(rng: random.Random, max_n: int = 10) -> Graph:
    """Mixed-family instance with at most ``max_n`` vertices, for cross-validation."""
    choice = rng.randrange(7)
    n = rng.randint(2, max_n)
    if choice == 0:
        return gnp(n, rng.choice((0.2, 0.4, 0.6, 0.8)), rng.randrange(10**9))
    if choice == 1:
        return complete(n)
    if choice == 2:
        a = rng.randint(1, max_n - 1)
        return complete_bipartite(a, rng.randint(1, max_n - a))
    if choice == 3:
        return hypercube(rng.randint(0, 3))
    if choice == 4:
        d = rng.randint(1, n - 1)
        if (n * d) % 2:
            d -= 1
        return random_regular(n, d, rng.randrange(10**9)) if d > 0 else Graph.from_edges(n)
    if choice == 5:
        size = max_n // 2
        k = rng.randint(1, min(3, size - 1))
        return two_blobs_bridged(size, k, rng.randint(0, size), rng.randrange(10**9))
    return tree(n, rng.randrange(10**9))


def bench_corpus() -> list[GeneratorSpec]:
    """The fixed instance list used by the round-trip and pipeline-fidelity checks."""
    specs = [GeneratorSpec("complete", {"n": n}) for n in (8, 10, 12, 14)]
    specs += [GeneratorSpec("hypercube", {"d": d}) for d in (3, 4, 5)]
    specs += [GeneratorSpec("complete_bipartite", {"a": 5, "b": 6})]
    specs += [GeneratorSpec("gnp", {"n": 24, "p": Fraction(7, 10)}, seed) for seed in range(3)]
    specs += [GeneratorSpec("random_regular", {"n": 16, "d": 9}, seed) for seed in range(2)]
    specs += [GeneratorSpec("two_blobs_bridged", {"blob_size": 10, "k": 4, "bridge": 4}, seed)
              for seed in range(2)]
    return specs
