"""Spanning bipartite subgraphs from locally maximal edge cuts.

If no single vertex can switch sides and enlarge the cut, every vertex has
at least half of its edges crossing, so the cross subgraph keeps at least
half of each vertex degree.  Keeping half of *every* edge cut needs
optimality against all subset flips, which for small graphs is the global
maximum cut (``mode="exhaustive"``).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from .graph import Bipartition, Graph, cross_subgraph

MODES = ("flip1", "flipset", "exhaustive")
EXHAUSTIVE_MAX_N = 20


@dataclass(frozen=True)
class LocalMaxCut:
    partition: Bipartition
    cut_size: int
    moves_performed: int
    mode: str = "flip1"


def cut_size(g: Graph, p: Bipartition) -> int:
    a = p.side_a
    return sum(1 for u, v in g.edges if (u in a) != (v in a))


def _balanced_start(g: Graph, rng: random.Random) -> dict[int, int]:
    order = list(g.vertex_list())
    rng.shuffle(order)
    half = len(order) // 2
    return {v: (0 if i < half else 1) for i, v in enumerate(order)}


def _flip1(g: Graph, side: dict[int, int]) -> int:
    """Move single vertices while that strictly enlarges the cut; returns the move count."""
    order = g.vertex_list()
    same = {v: sum(1 for w in g.neighbors(v) if side[w] == side[v]) for v in order}
    moves = 0
    changed = True
    while changed:
        changed = False
        for v in order:
            d = g.degree(v)
            if 2 * same[v] > d:
                s_old = side[v]
                side[v] = 1 - s_old
                for w in g.neighbors(v):
                    same[w] += 1 if side[w] == side[v] else -1
                same[v] = d - same[v]
                moves += 1
                changed = True
    return moves


def _subset_gain(g: Graph, side: dict[int, int], subset: set[int]) -> int:
    gain = 0
    for v in subset:
        for w in g.neighbors(v):
            if w in subset:
                continue
            gain += 1 if side[w] == side[v] else -1
    return gain


def local_max_cut(g: Graph, seed: int = 0, mode: str = "flip1",
                  proposals: int = 200) -> LocalMaxCut:
    """A bipartition no allowed move can improve.

    ``flip1`` repeats single-vertex moves in vertex order until a full pass
    changes nothing.  ``flipset`` also tries ``proposals`` random vertex
    subsets per round and accepts any strictly improving flip.
    ``exhaustive`` returns a maximum cut (every subset flip examined).
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    rng = random.Random(seed)
    side = _balanced_start(g, rng)
    moves = _flip1(g, side)
    if mode == "flipset":
        order = g.vertex_list()
        improved = True
        while improved and len(order) > 1:
            improved = False
            for _ in range(proposals):
                size = rng.randint(2, max(2, len(order) // 2))
                subset = set(rng.sample(order, min(size, len(order))))
                if _subset_gain(g, side, subset) > 0:
                    for v in subset:
                        side[v] = 1 - side[v]
                    moves += 1 + _flip1(g, side)
                    improved = True
                    break
    elif mode == "exhaustive":
        best = _maximum_cut_sides(g)
        if best is not None:
            current = sum(1 for u, v in g.edges if side[u] != side[v])
            best_size = sum(1 for u, v in g.edges if best[u] != best[v])
            if best_size > current:
                side = best
                moves += 1
    p = Bipartition(frozenset(v for v, s in side.items() if s == 0),
                    frozenset(v for v, s in side.items() if s == 1))
    return LocalMaxCut(p, cut_size(g, p), moves, mode)


def _maximum_cut_sides(g: Graph) -> dict[int, int] | None:
    n = g.n
    if n > EXHAUSTIVE_MAX_N:
        raise ValueError(f"exhaustive max cut is limited to n <= {EXHAUSTIVE_MAX_N}")
    if n < 2:
        return None
    order = g.vertex_list()
    index = {v: i for i, v in enumerate(order)}
    pairs = [(1 << index[u]) | (1 << index[v]) for u, v in g.edges]
    best_mask, best_val = 0, -1
    for mask in range(1 << (n - 1)):
        m = mask << 1
        val = 0
        for pm in pairs:
            b = m & pm
            if b and b != pm:
                val += 1
        if val > best_val:
            best_val, best_mask = val, m
    return {v: (best_mask >> index[v]) & 1 for v in order}


def halved_degree_subgraph(g: Graph, seed: int = 0,
                           mode: str = "flip1") -> tuple[Graph, Bipartition]:
    """Spanning bipartite H with d_H(v) >= ceil(d_G(v) / 2) for every vertex."""
    cut = local_max_cut(g, seed, mode)
    h = cross_subgraph(g, cut.partition)
    for v in g.vertex_list():
        if 2 * h.degree(v) < g.degree(v):
            raise AssertionError(f"vertex {v} kept {h.degree(v)} of {g.degree(v)} edges")
    return h, cut.partition


def weakest_cut_ratio(g: Graph, h: Graph) -> tuple[frozenset[int], int, int] | None:
    """Exhaustively find a vertex set S where H keeps fewer than half of E_G(S, V-S).

    Returns ``(S, |E_H(S)|, |E_G(S)|)`` for the first violation, or None.
    Intended for n <= 20.
    """
    order = g.vertex_list()
    n = len(order)
    for size in range(1, n // 2 + 1):
        for combo in combinations(order, size):
            s = frozenset(combo)
            cg = sum(1 for v in s for w in g.neighbors(v) if w not in s)
            ch = sum(1 for v in s for w in h.neighbors(v) if w not in s)
            if 2 * ch < cg:
                return s, ch, cg
    return None
