"""Peeling small separators off a digraph until its underlying graph is k-connected.

Each step removes a minimum separator S (|S| <= k-1) of the underlying graph
and keeps the smallest remaining component.  An out-neighbor of a kept
vertex is either kept or in S, so every out-degree drops by at most k-1 per
step, and the vertex count at least halves.  Starting from minimum
out-degree above ``(k-1) * ceil(log2 n)`` the loop therefore stops before
reaching a single vertex.
"""

from __future__ import annotations

from dataclasses import dataclass

from .connectivity import is_k_connected, vertex_connectivity
from .errors import InvariantError, PreconditionError
from .graph import Digraph, underlying_graph


def ceil_log2(n: int) -> int:
    """ceil(log2 n), with the value 0 for n <= 1."""
    return (n - 1).bit_length() if n > 1 else 0


@dataclass(frozen=True)
class PeelStep:
    separator: frozenset[int]
    chosen_component: frozenset[int]


@dataclass(frozen=True)
class PeelTrace:
    steps: tuple[PeelStep, ...]
    final: Digraph

    def __len__(self) -> int:
        return len(self.steps)


def degree_budget(n: int, k: int) -> int:
    return (k - 1) * ceil_log2(n)


def peel_to_k_connected(d: Digraph, k: int) -> tuple[Digraph, PeelTrace]:
    """Sub-digraph D' induced on a vertex subset with kappa(U(D')) >= k.

    Every vertex of D' keeps out-degree at least its original out-degree
    minus ``(k-1) * ceil(log2 |V(d)|)``.  Requires minimum out-degree above
    that budget.
    """
    if k < 1:
        raise PreconditionError("k must be at least 1")
    n = d.n
    if n == 0:
        raise PreconditionError("cannot peel the empty digraph")
    budget = degree_budget(n, k)
    if d.min_out_degree() <= budget:
        low = min(d.vertex_list(), key=d.out_degree)
        raise PreconditionError(
            f"vertex {low} has out-degree {d.out_degree(low)}, need more than {budget}")
    max_steps = ceil_log2(n)
    current = d
    steps: list[PeelStep] = []
    while True:
        u = underlying_graph(current)
        if is_k_connected(u, k):
            break
        if len(steps) >= max_steps:
            raise InvariantError(f"peeling did not stop within {max_steps} steps")
        kappa, witness = vertex_connectivity(u)
        if witness is None:
            raise InvariantError(
                f"underlying graph on {u.n} vertices has no separator yet kappa={kappa} < {k}")
        if len(witness.cut) > k - 1:
            raise InvariantError("minimum separator larger than k-1")
        comp = witness.side_small
        if 2 * len(comp) > current.n:
            raise InvariantError("chosen component is more than half of the vertices")
        nxt = current.induced(comp)
        for v in comp:
            if nxt.out_degree(v) < current.out_degree(v) - len(witness.cut):
                raise InvariantError(f"vertex {v} lost more than |S| out-arcs")
        steps.append(PeelStep(witness.cut, comp))
        current = nxt
    for v in current.vertex_list():
        if current.out_degree(v) < d.out_degree(v) - budget:
            raise InvariantError(f"vertex {v} lost more than the out-degree budget")
    if not is_k_connected(underlying_graph(current), k):
        raise InvariantError("peeled digraph is not k-connected")
    return current, PeelTrace(tuple(steps), current)
