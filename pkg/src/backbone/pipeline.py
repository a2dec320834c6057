"""Building a spanning bipartite k-connected subgraph, round by round.

One round:

1. Greedily collect disjoint bipartite k-connected pieces, each grown to a
   fixpoint of two exchange moves: absorb an outside vertex with k edges
   into one side, and merge two pieces joined by k independent edges
   between one side of each.
2. If a single piece spans the graph, certify it.
3. Otherwise give every piece an escape matching, thin it to one edge per
   touched element, split the leftover vertices by their degree into the
   pieces, and draw a random L/R labeling until the counting properties
   hold.
4. Delete the edges the labeling and the thinning forbid, orient the rest,
   and contract every piece to a single vertex of an auxiliary digraph.
5. Peel the digraph to a k-connected core, expand the core back to a
   subgraph of the working graph, check that it belongs to the merge
   family, and fold it into the piece list.

Everything that is emitted is re-verified; every dead end is reported with
the stage that hit it and the evidence.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field, fields
from fractions import Fraction
from typing import Callable, Iterable

from .bipartize import local_max_cut
from .certificate import Certificate, FailureReport, certificate_violation
from .connectivity import (Matching, VertexCover, hopcroft_karp, is_k_connected, konig_cover,
                           vertex_connectivity)
from .errors import InvariantError, PreconditionError
from .graph import (Bipartition, Digraph, Graph, cross_subgraph, edge_key,
                    underlying_graph)
from .mader import bipartite_dense_k_connected_subgraph, largest_k_connected_subgraph
from .merge import PatternGraph, PieceTuple, check_family_membership
from .peel import ceil_log2, degree_budget, peel_to_k_connected

STAGES = ("extract_pieces", "escape_matching", "thin_matching", "random_labeling",
          "peel", "merge", "fold", "max_rounds")

L, R = "L", "R"

# (coefficient, power of k) for each threshold, all multiplied by log n
ASYMPTOTIC_CONSTANTS = {
    "size_threshold": (1000, 2),
    "degree_split_threshold": (10_000, 3),
    "matching_target": (1000, 2),
    "thinned_size": (250, 1),
    "touch_threshold": (120, 1),
    "b_degree_threshold": (100_000, 3),
    "a_piece_threshold": (2000, 2),
}
CONNECTIVITY_CONSTANT = (10**10, 3)


def connectivity_hypothesis(k: int, n: int) -> int:
    """Connectivity under which the existence proof guarantees success."""
    c, p = CONNECTIVITY_CONSTANT
    return c * k**p * max(1, ceil_log2(n))


def seed_stream(seed: int, name: str, *index: int) -> random.Random:
    """Independent RNG per named stage, so adding a stage never shifts the others."""
    return random.Random("/".join([str(seed), name, *map(str, index)]))


@dataclass(frozen=True)
class PipelineConfig:
    k: int
    size_threshold: int
    degree_split_threshold: int
    matching_target: int
    thinned_size: int
    touch_threshold: int
    b_degree_threshold: int
    a_piece_threshold: int
    labeling_retries: int = 64
    max_rounds: int = 16
    seed: int = 0
    scale: Fraction = Fraction(1)

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("k must be at least 1")
        for f in fields(self):
            if f.name in ("seed",):
                continue
            value = getattr(self, f.name)
            if value <= 0:
                raise ValueError(f"{f.name} must be positive, got {value}")

    @classmethod
    def from_asymptotic(cls, k: int, n: int, scale=Fraction(1), **overrides) -> PipelineConfig:
        """Every constant of the existence proof, multiplied by ``scale``."""
        scale = Fraction(scale)
        log_n = max(1, ceil_log2(n))
        values = {name: max(1, math.ceil(scale * c * k**p * log_n))
                  for name, (c, p) in ASYMPTOTIC_CONSTANTS.items()}
        values.update(overrides)
        return cls(k=k, scale=scale, **values)

    @classmethod
    def desk(cls, k: int, n: int, **overrides) -> PipelineConfig:
        """Profile for graphs of a few dozen vertices.

        The scale puts the piece size threshold at max(2k+2, n/8), capped at n
        so that a spanning piece always qualifies.  The three
        labeling properties are pinned to k + (k-1) ceil(log2 n), the least
        out-degree that lets peeling leave every piece k escape edges.
        """
        log_n = max(1, ceil_log2(n))
        target = max(1, min(n, max(2 * k + 2, math.ceil(n / 8))))
        scale = Fraction(target, 1000 * k * k * log_n)
        need = k + degree_budget(max(n, 2), k)
        base = cls.from_asymptotic(k, n, scale)
        values = {f.name: getattr(base, f.name) for f in fields(base)}
        values.update(size_threshold=target, matching_target=target,
                      touch_threshold=need, b_degree_threshold=need, a_piece_threshold=need,
                      thinned_size=max(need, base.thinned_size))
        values.update(overrides)
        return cls(**values)

    def as_dict(self) -> dict[str, str]:
        return {f.name: str(getattr(self, f.name)) for f in fields(self)}


@dataclass(frozen=True)
class Piece:
    """A bipartite piece: all host edges between ``side_s`` and ``side_t``."""

    side_s: frozenset[int]
    side_t: frozenset[int]

    @property
    def vertices(self) -> frozenset[int]:
        return self.side_s | self.side_t

    def __len__(self) -> int:
        return len(self.side_s) + len(self.side_t)

    def graph(self, g: Graph) -> Graph:
        h = g.induced(self.vertices)
        return cross_subgraph(h, Bipartition(self.side_s, self.side_t))

    def sides(self) -> tuple[frozenset[int], frozenset[int]]:
        return self.side_s, self.side_t

    def bipartition(self) -> Bipartition:
        return Bipartition(self.side_s, self.side_t)


@dataclass
class Decomposition:
    pieces: list[Piece]
    leftover: frozenset[int]
    matchings: list[Matching] = field(default_factory=list)
    thinned: list[Matching] = field(default_factory=list)
    split: tuple[frozenset[int], frozenset[int]] = (frozenset(), frozenset())
    labeling: dict = field(default_factory=dict)
    working_graph: Graph | None = None
    aux_digraph: Digraph | None = None

    def elements(self) -> list[frozenset[int]]:
        """X = (H_1..H_t, v_1..v_s) as vertex sets."""
        return [p.vertices for p in self.pieces] + [frozenset((v,)) for v in sorted(self.leftover)]

    def element_of(self) -> dict[int, int]:
        return {v: i for i, vs in enumerate(self.elements()) for v in vs}

    def vertex_label(self, v: int) -> str:
        for i, p in enumerate(self.pieces):
            if v in p.side_s:
                return self.labeling[("S", i)]
            if v in p.side_t:
                return self.labeling[("T", i)]
        return self.labeling[("v", v)]


# -- pieces ----------------------------------------------------------------


def _side_matching(g: Graph, left: frozenset[int], right: frozenset[int]) -> dict[int, int]:
    adj = {u: g.neighbors(u) & right for u in left}
    adj = {u: nb for u, nb in adj.items() if nb}
    return hopcroft_karp(sorted(adj), adj)


def _merge_move(g: Graph, a: Piece, b: Piece, k: int) -> Piece | None:
    """Piece a+b if some side of a and some side of b carry k independent edges."""
    for x, x_bar in (a.sides(), a.sides()[::-1]):
        for y, y_bar in (b.sides(), b.sides()[::-1]):
            if len(_side_matching(g, x, y)) >= k:
                # x-y edges must cross, so y joins the side opposite x
                return Piece(x | y_bar, x_bar | y)
    return None


def _absorb_move(g: Graph, piece: Piece, v: int, k: int) -> Piece | None:
    if g.degree_into(v, piece.side_s) >= k:
        return Piece(piece.side_s, piece.side_t | {v})
    if g.degree_into(v, piece.side_t) >= k:
        return Piece(piece.side_s | {v}, piece.side_t)
    return None


def augment_piece(g: Graph, piece: Piece, k: int, others: Iterable[Piece] = (),
                  blocked: Iterable[int] = ()) -> tuple[Piece, list[int]]:
    """Grow ``piece`` to a fixpoint of the absorb and merge moves.

    Vertices in ``blocked`` are never absorbed; vertices of ``others`` are
    only gained by merging a whole piece.  Returns the grown piece and the
    indices of the ``others`` it swallowed.
    """
    others = list(others)
    blocked = set(blocked) | {v for o in others for v in o.vertices}
    merged: list[int] = []
    changed = True
    while changed:
        changed = False
        for v in sorted(g.vertices - piece.vertices - blocked):
            grown = _absorb_move(g, piece, v, k)
            if grown is not None:
                piece, changed = grown, True
        for j, other in enumerate(others):
            if j in merged:
                continue
            grown = _merge_move(g, piece, other, k)
            if grown is not None:
                piece, changed = grown, True
                merged.append(j)
                blocked -= other.vertices
    if not is_k_connected(piece.graph(g), k):
        raise InvariantError("augmented piece is not k-connected")
    return piece, merged


def _augment_all(g: Graph, pieces: list[Piece], k: int) -> list[Piece]:
    """Fixpoint of the exchange moves over the ordered piece list.

    Piece i may take any vertex outside pieces 0..i (a later piece that loses
    a vertex is kept if still k-connected, dissolved otherwise) and may merge
    with any later piece.  Each move makes the size sequence
    lexicographically larger, so the loop ends.
    """
    pieces = list(pieces)
    dirty = True
    while dirty:
        dirty = False
        earlier: set[int] = set()
        i = 0
        while i < len(pieces):
            moved = True
            while moved:
                moved = False
                p = pieces[i]
                owner = {v: j for j in range(i + 1, len(pieces)) for v in pieces[j].vertices}
                for v in sorted(g.vertices - earlier - p.vertices):
                    grown = _absorb_move(g, p, v, k)
                    if grown is None:
                        continue
                    pieces[i] = grown
                    j = owner.get(v)
                    if j is not None:
                        rest = Piece(pieces[j].side_s - {v}, pieces[j].side_t - {v})
                        if len(rest) > k and is_k_connected(rest.graph(g), k):
                            pieces[j] = rest
                        else:
                            del pieces[j]
                    moved = dirty = True
                    break
                if moved:
                    continue
                for j in range(i + 1, len(pieces)):
                    grown = _merge_move(g, pieces[i], pieces[j], k)
                    if grown is not None:
                        pieces[i] = grown
                        del pieces[j]
                        moved = dirty = True
                        break
            earlier |= pieces[i].vertices
            i += 1
    for p in pieces:
        if not is_k_connected(p.graph(g), k):
            raise InvariantError("augmented piece is not k-connected")
    return pieces


def claim_violations(g: Graph, pieces: list[Piece], k: int) -> list[tuple]:
    """Breaches of the two fixpoint claims.

    ``("a", i, j)``: some side of piece i and some side of piece j carry k
    independent edges (so 4k independent edges between them could exist).
    ``("b", i, v)``: vertex v outside pieces 0..i has 2k or more edges into
    piece i, or k into one of its sides.
    """
    out = []
    for i in range(len(pieces)):
        for j in range(i + 1, len(pieces)):
            if _merge_move(g, pieces[i], pieces[j], k) is not None:
                out.append(("a", i, j))
    earlier: set[int] = set()
    for i, p in enumerate(pieces):
        earlier |= p.vertices
        for v in sorted(g.vertices - earlier):
            s, t = g.degree_into(v, p.side_s), g.degree_into(v, p.side_t)
            if s + t >= 2 * k or s >= k or t >= k:
                out.append(("b", i, v))
    return out


def _candidate_piece(h: Graph, k: int, rng: random.Random, restarts: int = 3) -> Piece | None:
    """Largest bipartite k-connected subgraph found over a few max-cut bipartitions of h."""
    if h.n <= k:
        return None
    partitions = []
    coloring = h.two_coloring()
    if coloring is not None:
        partitions.append(coloring)
    else:
        partitions += [local_max_cut(h, rng.randrange(2**32)).partition for _ in range(restarts)]
    best: Piece | None = None
    try:
        _, part = bipartite_dense_k_connected_subgraph(h, k, rng.randrange(2**32))
        best = Piece(part.side_a, part.side_b)
    except PreconditionError:
        pass
    for p in partitions:
        found = largest_k_connected_subgraph(cross_subgraph(h, p), k)
        if found is not None and (best is None or found.n > len(best)):
            best = Piece(p.side_a & found.vertices, p.side_b & found.vertices)
    return best


def extract_pieces(g: Graph, cfg: PipelineConfig, pieces: Iterable[Piece] = (),
                   rng: random.Random | None = None) -> tuple[list[Piece], frozenset[int]]:
    """Greedy piece collection on the residual graph, each kept at the exchange fixpoint."""
    rng = rng or seed_stream(cfg.seed, "extract")
    pieces = _augment_all(g, list(pieces), cfg.k)
    while True:
        covered = frozenset().union(*(p.vertices for p in pieces))
        residual = g.without(covered)
        if residual.n < cfg.size_threshold:
            break
        cand = _candidate_piece(residual, cfg.k, rng)
        if cand is None or len(cand) < cfg.size_threshold:
            break
        pieces = _augment_all(g, pieces + [cand], cfg.k)
    covered = frozenset().union(*(p.vertices for p in pieces))
    return pieces, g.vertices - covered


# -- matchings -------------------------------------------------------------


@dataclass(frozen=True)
class EscapeMatching:
    matching: Matching
    reached: bool
    cover: VertexCover | None = None


def escape_matching(g: Graph, piece_vertices: Iterable[int], target: int) -> EscapeMatching:
    """Independent edges with exactly one end in the piece.

    Returns exactly ``target`` of them when possible; otherwise the maximum
    matching together with its Konig cover, a set of fewer than ``target``
    vertices touching every edge that leaves the piece.
    """
    inside = frozenset(piece_vertices)
    if not inside < g.vertices:
        raise ValueError("piece must be a proper subset of the vertex set")
    left = sorted(inside)
    adj = {u: g.neighbors(u) - inside for u in left}
    mate = hopcroft_karp(left, adj)
    edges = sorted(edge_key(u, w) for u, w in mate.items())
    if len(edges) >= target:
        return EscapeMatching(Matching(frozenset(edges[:target])), True)
    cover_l, cover_r = konig_cover(left, adj, mate)
    return EscapeMatching(Matching(frozenset(edges)), False,
                          VertexCover(frozenset(cover_l) | frozenset(cover_r)))


def thin_matching(m: Matching, element_of: dict[int, int], piece_index: int,
                  want: int) -> Matching:
    """One edge per distinct outer element, at most ``want`` edges, in sorted order."""
    chosen = []
    used: set[int] = set()
    for u, v in sorted(m.edges):
        if len(chosen) >= want:
            break
        outer = v if element_of[u] == piece_index else u
        e = element_of[outer]
        if e == piece_index or e in used:
            continue
        used.add(e)
        chosen.append((u, v))
    return Matching(frozenset(chosen))


def split_leftover(g: Graph, leftover: Iterable[int], pieces: Iterable[Piece],
                   threshold: int) -> tuple[frozenset[int], frozenset[int]]:
    """(A, B): A holds leftover vertices with at least ``threshold`` edges into the pieces."""
    leftover = frozenset(leftover)
    covered = frozenset().union(*(p.vertices for p in pieces))
    a = frozenset(v for v in leftover if g.degree_into(v, covered) >= threshold)
    return a, leftover - a


# -- labeling and the working graph ----------------------------------------


@dataclass(frozen=True)
class PropertyReport:
    """Elements failing each counting property, with the count they reached."""

    touch: dict[int, int]
    b_degree: dict[int, int]
    a_pieces: dict[int, int]

    @property
    def ok(self) -> bool:
        return not (self.touch or self.b_degree or self.a_pieces)

    def first_failure(self) -> tuple[str, int, int] | None:
        for name, bad in (("touch", self.touch), ("b_degree", self.b_degree),
                          ("a_pieces", self.a_pieces)):
            if bad:
                key = min(bad)
                return name, key, bad[key]
        return None


@dataclass(frozen=True)
class LabelingOutcome:
    labeling: dict
    attempts: int
    report: PropertyReport | None


def random_labeling(t: int, leftover: Iterable[int], rng: random.Random,
                    check: Callable[[dict], PropertyReport] | None = None,
                    retries: int = 64) -> LabelingOutcome:
    """Fair coins for every piece (S and T get opposite labels) and every leftover vertex.

    Resamples until ``check`` reports success, at most ``retries`` times.
    """
    leftover = sorted(leftover)
    report = None
    labeling: dict = {}
    for attempt in range(1, max(1, retries) + 1):
        labeling = {}
        for i in range(t):
            heads = rng.random() < 0.5
            labeling[("S", i)] = L if heads else R
            labeling[("T", i)] = R if heads else L
        for v in leftover:
            labeling[("v", v)] = L if rng.random() < 0.5 else R
        if check is None:
            return LabelingOutcome(labeling, attempt, None)
        report = check(labeling)
        if report.ok:
            return LabelingOutcome(labeling, attempt, report)
    return LabelingOutcome(labeling, max(1, retries), report)


def build_working_graph(g: Graph, dec: Decomposition, cfg: PipelineConfig | None = None) -> Graph:
    """Spanning subgraph G' of g, bipartite with parts labeled L and R.

    An edge is dropped when its ends carry the same label, when both ends lie
    in A, or when it joins two different pieces without belonging to either
    piece's thinned matching.
    """
    label = {v: dec.vertex_label(v) for v in g.vertices}
    piece_of = {v: i for i, p in enumerate(dec.pieces) for v in p.vertices}
    thinned = set().union(*(m.edges for m in dec.thinned)) if dec.thinned else set()
    a_side = dec.split[0]
    keep = []
    for u, v in g.sorted_edges():
        if label[u] == label[v]:
            continue
        if u in a_side and v in a_side:
            continue
        pu, pv = piece_of.get(u), piece_of.get(v)
        if pu is not None and pv is not None and pu != pv and (u, v) not in thinned:
            continue
        keep.append((u, v))
    h = g.spanning(keep)
    lefts = frozenset(v for v in g.vertices if label[v] == L)
    part = Bipartition(lefts, g.vertices - lefts)
    if any(not part.crosses(u, v) for u, v in h.edges):
        raise InvariantError("working graph is not properly 2-colored by its labels")
    return h


def property_checks(dec: Decomposition, cfg: PipelineConfig) -> PropertyReport:
    """Exact counts for the three labeling properties on the working graph."""
    gp = dec.working_graph
    elem = dec.element_of()
    a_side, b_side = dec.split
    touch = {}
    for i, m in enumerate(dec.thinned):
        reached = set()
        for u, v in m.edges:
            if gp.has_edge(u, v):
                outer = v if elem[u] == i else u
                reached.add(elem[outer])
        if len(reached) < cfg.touch_threshold:
            touch[i] = len(reached)
    ab = a_side | b_side
    b_deg = {}
    for b in b_side:
        d = gp.degree_into(b, ab)
        if d < cfg.b_degree_threshold:
            b_deg[b] = d
    piece_of = {v: i for i, p in enumerate(dec.pieces) for v in p.vertices}
    a_cnt = {}
    for a in a_side:
        hit = {piece_of[w] for w in gp.neighbors(a) if w in piece_of}
        if len(hit) < cfg.a_piece_threshold:
            a_cnt[a] = len(hit)
    return PropertyReport(touch, b_deg, a_cnt)


def orient_and_project(gp: Graph, dec: Decomposition) -> Digraph:
    """Auxiliary digraph on the element indices of X.

    Thinned-matching edges point out of their piece, A-to-piece edges out of
    A, other leftover-to-piece edges out of the leftover vertex, and edges
    inside the leftover point both ways.  Edges inside one piece vanish.
    """
    elem = dec.element_of()
    t = len(dec.pieces)
    a_side = dec.split[0]
    thinned_of = [m.edges for m in dec.thinned]
    arcs = set()
    for u, v in gp.sorted_edges():
        eu, ev = elem[u], elem[v]
        if eu == ev:
            continue
        in_thinned = False
        for ex, ey in ((eu, ev), (ev, eu)):
            if ex < t and (u, v) in thinned_of[ex]:
                arcs.add((ex, ey))
                in_thinned = True
        if eu >= t and ev >= t:
            arcs.add((eu, ev))
            arcs.add((ev, eu))
            continue
        for x, ex, ey in ((u, eu, ev), (v, ev, eu)):
            if ex >= t and ey < t:
                if x in a_side or not in_thinned:
                    arcs.add((ex, ey))
    return Digraph(range(t + len(dec.leftover)), arcs)


# -- folding ---------------------------------------------------------------


def fold_merged_component(dec: Decomposition, merged: Graph, part: Bipartition,
                          g: Graph, k: int) -> list[Piece]:
    """Replace the pieces inside ``merged`` by it, or append it as a new piece.

    ``merged`` is a union of whole elements of X; the result covers strictly
    more vertices, or the same vertices with fewer pieces.
    """
    if any(not part.crosses(u, v) for u, v in merged.edges):
        raise InvariantError("merged component is not bipartite")
    if not is_k_connected(merged, k):
        raise InvariantError("merged component is not k-connected")
    inside = merged.vertices
    absorbed = [i for i, p in enumerate(dec.pieces) if p.vertices <= inside]
    for i, p in enumerate(dec.pieces):
        if i not in absorbed and p.vertices & inside:
            raise InvariantError(f"merged component cuts through piece {i}")
    new = Piece(part.side_a & inside, part.side_b & inside)
    kept = [p for i, p in enumerate(dec.pieces) if i not in absorbed]
    if absorbed:
        kept.insert(absorbed[0], new)
    else:
        kept.append(new)
    before = sum(len(p) for p in dec.pieces), -len(dec.pieces)
    after = sum(len(p) for p in kept), -len(kept)
    if after <= before:
        raise InvariantError("folding made no progress")
    return kept


# -- orchestration ---------------------------------------------------------


def _certify(g: Graph, piece: Piece, k: int, rounds: int) -> Certificate:
    h = piece.graph(g)
    part = piece.bipartition()
    problem = certificate_violation(g, h, part, k)
    if problem is not None:
        raise InvariantError(f"certificate failed re-verification: {problem}")
    kappa, _ = vertex_connectivity(h)
    return Certificate(h, part, kappa, rounds)


def _element_name(dec: Decomposition, idx: int) -> str:
    t = len(dec.pieces)
    if idx < t:
        return f"piece{idx}"
    v = sorted(dec.leftover)[idx - t]
    return f"{'A' if v in dec.split[0] else 'B'}-vertex{v}"


def run_round(g: Graph, cfg: PipelineConfig, pieces: list[Piece], leftover: frozenset[int],
              rnd: int) -> tuple[list[Piece] | FailureReport, Decomposition]:
    """Steps 3-5 of a round; returns the new piece list or a failure report."""
    k = cfg.k
    dec = Decomposition(list(pieces), frozenset(leftover))
    elem = dec.element_of()
    for i, p in enumerate(pieces):
        em = escape_matching(g, p.vertices, cfg.matching_target)
        if not em.reached:
            return FailureReport("escape_matching", {
                "piece": i, "matching_size": len(em.matching), "target": cfg.matching_target,
                "cover": sorted(em.cover.cover)}, rnd), dec
        dec.matchings.append(em.matching)
        thin = thin_matching(em.matching, elem, i, cfg.thinned_size)
        if len(thin) < cfg.thinned_size:
            return FailureReport("thin_matching", {
                "piece": i, "distinct_elements": len(thin), "target": cfg.thinned_size}, rnd), dec
        dec.thinned.append(thin)
    dec.split = split_leftover(g, dec.leftover, pieces, cfg.degree_split_threshold)

    def check(labeling: dict) -> PropertyReport:
        dec.labeling = labeling
        dec.working_graph = build_working_graph(g, dec, cfg)
        return property_checks(dec, cfg)

    outcome = random_labeling(len(pieces), dec.leftover, seed_stream(cfg.seed, "label", rnd),
                              check, cfg.labeling_retries)
    if not outcome.report.ok:
        name, key, count = outcome.report.first_failure()
        return FailureReport("random_labeling", {
            "attempts": outcome.attempts, "predicate": name,
            "element": key, "count": count}, rnd), dec

    d = orient_and_project(dec.working_graph, dec)
    dec.aux_digraph = d
    try:
        core, trace = peel_to_k_connected(d, k)
    except PreconditionError:
        low = min(d.vertex_list(), key=d.out_degree)
        return FailureReport("peel", {
            "element": _element_name(dec, low), "out_degree": d.out_degree(low),
            "needed_above": degree_budget(d.n, k)}, rnd), dec

    chosen = core.vertex_list()
    elements = dec.elements()
    t = len(pieces)
    inside = frozenset().union(*(elements[x] for x in chosen))
    merged = dec.working_graph.induced(inside)
    piece_ids = [x for x in chosen if x < t]
    single_ids = [x for x in chosen if x >= t]
    relabel = {x: i for i, x in enumerate(piece_ids + single_ids)}
    x_tuple = PieceTuple(tuple(merged.induced(elements[x]) for x in piece_ids),
                         tuple(min(elements[x]) for x in single_ids), k)
    pattern = underlying_graph(core)
    r = PatternGraph(Graph.from_edges(len(chosen), [(relabel[a], relabel[b])
                                                    for a, b in pattern.edges]), k)
    report = check_family_membership(merged, x_tuple, r, k)
    if not report.all_clear:
        return FailureReport("merge", {
            "condition_ii_missing": list(report.condition_ii),
            "condition_iii_deficit": sorted(report.condition_iii.items()),
            "elements": [_element_name(dec, x) for x in chosen]}, rnd), dec

    lefts = frozenset(v for v in inside if dec.vertex_label(v) == L)
    try:
        folded = fold_merged_component(dec, merged, Bipartition(lefts, inside - lefts), g, k)
    except InvariantError as exc:
        return FailureReport("fold", {"reason": str(exc)}, rnd), dec
    return folded, dec


def backbone(g: Graph, cfg: PipelineConfig,
             audit: list | None = None) -> Certificate | FailureReport:
    """Spanning bipartite k-connected subgraph of ``g`` with a verified certificate,
    or a report of the stage that got stuck.

    If ``audit`` is a list, one ``(round, piece sizes, claim violations)``
    entry is appended per round.
    """
    k = cfg.k
    pieces: list[Piece] = []
    for rnd in range(1, cfg.max_rounds + 1):
        pieces, leftover = extract_pieces(g, cfg, pieces, seed_stream(cfg.seed, "extract", rnd))
        bad = claim_violations(g, pieces, k)
        if audit is not None:
            audit.append((rnd, [len(p) for p in pieces], bad))
        if bad:
            raise InvariantError(f"exchange fixpoint violated: {bad[:3]}")
        if not pieces:
            return FailureReport("extract_pieces", {
                "reason": f"no bipartite {k}-connected subgraph on at least "
                          f"{cfg.size_threshold} vertices",
                "residual_vertices": g.n}, rnd)
        if len(pieces) == 1 and not leftover:
            return _certify(g, pieces[0], k, rnd)
        result, _ = run_round(g, cfg, pieces, leftover, rnd)
        if isinstance(result, FailureReport):
            return result
        pieces = result
    return FailureReport("max_rounds", {"rounds": cfg.max_rounds,
                                        "pieces": [len(p) for p in pieces]}, cfg.max_rounds)
