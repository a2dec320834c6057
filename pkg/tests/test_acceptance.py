"""Acceptance criteria 1-10, each with its instance count, tolerance and time budget.

Run under pytest (one PASS/FAIL line per criterion in the terminal summary)
or directly with ``python tests/test_acceptance.py``.
"""

import contextlib
import io
import math
import random
import sys
import tempfile
import time
from itertools import combinations
from pathlib import Path

import pytest

from backbone import oracle
from backbone.bipartize import halved_degree_subgraph, weakest_cut_ratio
from backbone.certificate import Certificate, certificate_violation
from backbone.cli import main as cli_main
from backbone.connectivity import edge_connectivity, vertex_connectivity
from backbone.errors import InvariantError, PreconditionError
from backbone.graph import Digraph, Graph, average_degree, underlying_graph
from backbone.io import write_graph
from backbone.mader import bipartite_dense_k_connected_subgraph, dense_k_connected_subgraph
from backbone.merge import PatternGraph, PieceTuple, check_family_membership, join_two
from backbone.peel import ceil_log2, degree_budget, peel_to_k_connected
from backbone.pipeline import PipelineConfig, backbone


def kappa_at_least(g, k):
    """kappa(g) >= k by trying every vertex set of size < k; independent of the flow code."""
    return oracle.brute_is_k_connected(g, k)


def k_connected_piece(rng, k, n, offset):
    """Harary graph plus random chords: k-connected, otherwise random."""
    h = oracle.harary(k, n)
    extra = [e for e in combinations(range(n), 2) if not h.has_edge(*e) and rng.random() < 0.3]
    edges = [(u + offset, v + offset) for u, v in (*h.edges, *extra)]
    return Graph(range(offset, offset + n), edges)


# -- criteria ----------------------------------------------------------------

def criterion_1():
    rng = random.Random(101)
    mismatches = 0
    for _ in range(300):
        g = oracle.random_small_graph(rng, 10)
        if vertex_connectivity(g)[0] != oracle.brute_kappa(g):
            mismatches += 1
    return mismatches == 0, f"300 graphs, {mismatches} mismatches"


def _halving_instance(rng):
    n = rng.randint(2, 60)
    kind = rng.randrange(3)
    if kind == 0:
        return oracle.gnp(n, rng.random(), rng.randrange(10**9))
    if kind == 1:
        d = rng.randint(0, min(n - 1, 12))
        if n * d % 2:
            d -= 1
        return oracle.random_regular(n, max(d, 0), rng.randrange(10**9))
    a = rng.randint(1, n - 1)
    return oracle.gnp(n, 0.3 + 0.7 * rng.random(), rng.randrange(10**9)) if a < 2 else \
        oracle.complete_bipartite(a, n - a)


def criterion_2():
    rng = random.Random(202)
    bad = 0
    implications = 0
    for i in range(500):
        g = _halving_instance(rng)
        h, p = halved_degree_subgraph(g, seed=i)
        if any(h.degree(v) < math.ceil(g.degree(v) / 2) for v in g.vertices):
            bad += 1
        if g.n:
            for k in range(1, 6):
                if g.min_degree() >= 2 * k - 1:
                    implications += 1
                    if h.min_degree() < k:
                        bad += 1
    return bad == 0, f"500 graphs, {implications} degree implications, {bad} violations"


def criterion_3():
    rng = random.Random(303)
    bad = 0
    for i in range(50):
        g = oracle.gnp(rng.randint(2, 12), 0.2 + 0.8 * rng.random(), rng.randrange(10**9))
        h, _ = halved_degree_subgraph(g, seed=i, mode="exhaustive")
        if weakest_cut_ratio(g, h) is not None:
            bad += 1
        if g.n >= 2 and edge_connectivity(h)[0] < math.ceil(edge_connectivity(g)[0] / 2):
            bad += 1
    return bad == 0, f"50 graphs, every vertex subset checked, {bad} violations"


def _dense_instance(rng, factor, ell):
    while True:
        n = rng.randint(factor * ell + 1, 80)
        p = min(1.0, rng.uniform(1.0, 2.5) * factor * ell / (n - 1))
        if rng.random() < 0.2:
            d = rng.randint(factor * ell, n - 1)
            if n * d % 2:
                continue
            g = oracle.random_regular(n, d, rng.randrange(10**9))
        else:
            g = oracle.gnp(n, p, rng.randrange(10**9))
        if average_degree(g) >= factor * ell:
            return g


def criterion_4():
    rng = random.Random(404)
    errors, bad = 0, 0
    for i in range(500):
        ell = (1, 2, 3)[i % 3]
        g = _dense_instance(rng, 4, ell)
        try:
            w = dense_k_connected_subgraph(g, ell)
        except (InvariantError, PreconditionError):
            errors += 1
            continue
        if not (w.subgraph.edges <= g.edges and kappa_at_least(w.subgraph, ell)):
            bad += 1
    for i in range(500):
        ell = (1, 2, 3)[i % 3]
        g = _dense_instance(rng, 8, ell)
        try:
            w, part = bipartite_dense_k_connected_subgraph(g, ell, seed=i)
        except (InvariantError, PreconditionError):
            errors += 1
            continue
        two_colored = all(part.crosses(u, v) for u, v in w.subgraph.edges)
        if not (two_colored and w.subgraph.edges <= g.edges and kappa_at_least(w.subgraph, ell)):
            bad += 1
    ok = errors == 0 and bad == 0
    return ok, f"500 + 500 bipartite instances, {errors} invariant errors, {bad} bad witnesses"


def criterion_5():
    rng = random.Random(505)
    bad = 0
    for i in range(200):
        k = (2, 3)[i % 2]
        a = k_connected_piece(rng, k, rng.randint(k + 1, 10), 0)
        b = k_connected_piece(rng, k, rng.randint(k + 1, 10), a.n)
        left = rng.sample(sorted(a.vertices), k)
        right = rng.sample(sorted(b.vertices), k)
        g = join_two(a, b, list(zip(left, right)), k)
        if not kappa_at_least(g, k):
            bad += 1
    return bad == 0, f"200 joins, {bad} below k"


def _brute_escape_ok(piece, edges, elem, i, k):
    """k edges leaving piece i with distinct inner ends and distinct target elements."""
    out = [(u, v) if u in piece else (v, u) for u, v in edges if (u in piece) != (v in piece)]
    for combo in combinations(out, k):
        if len({u for u, _ in combo}) == k and len({elem[w] for _, w in combo}) == k:
            return True
    return False


def _family_instance(rng):
    while True:
        k = rng.choice((2, 3))
        t, s = rng.randint(1, 3), rng.randint(0, 3)
        if t + s < k + 1:
            continue
        sizes = [rng.randint(k + 1, k + 3) for _ in range(t)]
        if sum(sizes) + s > 14:
            continue
        pieces, offset = [], 0
        for size in sizes:
            pieces.append(k_connected_piece(rng, k, size, offset))
            offset += size
        x = PieceTuple(tuple(pieces), tuple(range(offset, offset + s)), k)
        r = PatternGraph(k_connected_piece(rng, k, t + s, 0), k)
        elem = x.element_of()
        density = rng.uniform(0.15, 0.6)
        cross = [(u, v) for u, v in combinations(range(offset + s), 2)
                 if elem[u] != elem[v] and rng.random() < density]
        g = Graph(range(offset + s), [*(e for p in pieces for e in p.edges), *cross])
        return g, x, r, k


def _mutant(rng, g, x, r, k, kind):
    """Remove one edge that an independent count says the family needs, or None."""
    elem = x.element_of()
    if kind == "i":
        p = rng.choice(x.pieces)
        return g.spanning(g.edges - {rng.choice(sorted(p.edges))})
    if kind == "ii":
        for a, b in sorted(r.graph.edges, key=lambda _: rng.random()):
            links = [e for e in g.edges if {elem[e[0]], elem[e[1]]} == {a, b}]
            if len(links) == 1:
                return g.spanning(g.edges - set(links))
        return None
    for i, p in enumerate(x.pieces):
        leaving = sorted(e for e in g.edges if (e[0] in p.vertices) != (e[1] in p.vertices))
        for e in leaving:
            if not _brute_escape_ok(p.vertices, [f for f in leaving if f != e], elem, i, k):
                return g.spanning(g.edges - {e})
    return None


def criterion_6():
    rng = random.Random(606)
    clear, generated, bad = 0, 0, 0
    pool = []
    while clear < 200:
        g, x, r, k = _family_instance(rng)
        generated += 1
        if not check_family_membership(g, x, r, k).all_clear:
            continue
        clear += 1
        pool.append((g, x, r, k))
        if oracle.brute_kappa(g) < k:
            bad += 1
    mutants, unflipped = 0, 0
    kinds = {"i": 0, "ii": 0, "iii": 0}
    order = ["iii", "ii", "i"]
    for g, x, r, k in pool:
        if mutants == 50:
            break
        for kind in order:
            m = _mutant(rng, g, x, r, k, kind)
            if m is not None:
                break
        order = order[1:] + order[:1]
        mutants += 1
        kinds[kind] += 1
        if check_family_membership(m, x, r, k).all_clear:
            unflipped += 1
    ok = bad == 0 and mutants == 50 and unflipped == 0
    return ok, (f"{clear} all-clear members of {generated} generated, {bad} below k; "
                f"{mutants} mutants {kinds}, {unflipped} not flipped")


def _peel_instance(rng):
    while True:
        k = rng.choice((2, 3))
        clusters = rng.randint(1, 4)
        size = rng.randint(4, 64 // clusters)
        n = clusters * size
        need = degree_budget(n, k) + 1
        if size - 1 < need:
            continue
        arcs = set()
        for c in range(clusters):
            members = range(c * size, (c + 1) * size)
            for v in members:
                outs = rng.sample([w for w in members if w != v], rng.randint(need, size - 1))
                arcs.update((v, w) for w in outs)
        for _ in range(rng.randint(0, 3 * clusters)):
            arcs.add(tuple(rng.sample(range(n), 2)))
        d = Digraph(range(n), arcs)
        if d.min_out_degree() > degree_budget(n, k):
            return d, k


def criterion_7():
    rng = random.Random(707)
    bad, peeled = 0, 0
    for _ in range(200):
        d, k = _peel_instance(rng)
        out, trace = peel_to_k_connected(d, k)
        peeled += bool(trace.steps)
        budget = degree_budget(d.n, k)
        ok = (out == d.induced(out.vertices)
              and all(out.out_degree(v) >= d.out_degree(v) - budget for v in out.vertices)
              and kappa_at_least(underlying_graph(out), k)
              and len(trace) <= ceil_log2(d.n))
        bad += not ok
    return bad == 0, f"200 digraphs ({peeled} needed peeling), {bad} postcondition failures"


def criterion_8():
    rng = random.Random(808)
    unsound, emitted, reachable, found = 0, 0, 0, 0
    for i in range(100):
        if i % 2:
            g = oracle.random_small_graph(rng, 14)
        else:
            g = oracle.gnp(rng.randint(6, 14), rng.uniform(0.5, 0.95), rng.randrange(10**9))
        k = (2, 3)[i % 4 // 2]
        result = backbone(g, PipelineConfig.desk(k, max(g.n, 2), seed=i))
        exists = oracle.exists_spanning_bipartite_k_connected(g, k)[0]
        reachable += exists
        if isinstance(result, Certificate):
            emitted += 1
            found += exists
            unsound += not exists
            unsound += certificate_violation(g, result.subgraph, result.bipartition, k) is not None
    floors = []
    for k in (2, 3):
        for n in range(4 * k, 41):
            if not isinstance(backbone(oracle.complete(n), PipelineConfig.desk(k, n)), Certificate):
                floors.append(f"K{n}/k={k}")
        for d in range(k, 7):
            g = oracle.hypercube(d)
            if not isinstance(backbone(g, PipelineConfig.desk(k, g.n)), Certificate):
                floors.append(f"Q{d}/k={k}")
    ok = unsound == 0 and not floors
    return ok, (f"{emitted} certificates, {unsound} unsound; completeness {found}/{reachable}; "
                f"hard-floor misses: {floors or 'none'}")


def criterion_9():
    failures = []
    quiet = io.StringIO()
    with tempfile.TemporaryDirectory() as tmp, contextlib.redirect_stdout(quiet), \
            contextlib.redirect_stderr(quiet):
        tmp = Path(tmp)
        for idx, spec in enumerate(oracle.bench_corpus()):
            g = oracle.generate(spec)
            host = tmp / f"g{idx}.txt"
            write_graph(g, host)
            for k in (2, 3):
                outs = []
                for run in range(2):
                    out = tmp / f"g{idx}_k{k}_{run}.cert"
                    code = cli_main(["backbone", str(host), "--k", str(k), "--seed",
                                     str(spec.seed), "--out", str(out)])
                    if code != 0:
                        failures.append(f"{spec.family}#{idx} k={k} backbone exit {code}")
                    outs.append(out.read_bytes())
                if outs[0] != outs[1]:
                    failures.append(f"{spec.family}#{idx} k={k} not byte-identical")
                if cli_main(["verify", str(host), str(tmp / f"g{idx}_k{k}_0.cert")]) != 0:
                    failures.append(f"{spec.family}#{idx} k={k} verify failed")
    count = 2 * len(oracle.bench_corpus())
    return not failures, f"{count} corpus runs, failures: {failures or 'none'}"


def criterion_10():
    audited, violations = 0, []
    for spec in oracle.bench_corpus():
        g = oracle.generate(spec)
        for k in (2, 3):
            audit = []
            try:
                backbone(g, PipelineConfig.desk(k, g.n, seed=spec.seed), audit=audit)
            except InvariantError as exc:
                violations.append(str(exc))
            audited += len(audit)
            violations += [bad for _, _, bad in audit if bad]
    return not violations, f"{audited} rounds audited, violations: {violations or 'none'}"


CRITERIA = [
    (1, "connectivity cross-validation", criterion_1, 10),
    (2, "degree halving", criterion_2, 5),
    (3, "cut preservation", criterion_3, 60),
    (4, "dense subgraph extraction", criterion_4, 120),
    (5, "two-piece merging", criterion_5, 60),
    (6, "family merging and mutants", criterion_6, 120),
    (7, "separator peeling", criterion_7, 60),
    (8, "oracle agreement", criterion_8, 300),
    (9, "round-trip determinism", criterion_9, 300),
    (10, "fixpoint claims audit", criterion_10, 300),
]


def evaluate(number, title, fn, budget):
    start = time.perf_counter()
    ok, detail = fn()
    elapsed = time.perf_counter() - start
    passed = ok and elapsed < budget
    line = (f"{'PASS' if passed else 'FAIL'} criterion {number} ({title}): {detail}; "
            f"{elapsed:.1f}s of {budget}s")
    return passed, line


@pytest.mark.parametrize("number, title, fn, budget", CRITERIA, ids=[f"c{c[0]}" for c in CRITERIA])
def test_criterion(number, title, fn, budget, acceptance_log):
    passed, line = evaluate(number, title, fn, budget)
    acceptance_log.append(line)
    print(line)
    assert passed, line


if __name__ == "__main__":
    results = [evaluate(*c) for c in CRITERIA]
    for _, line in results:
        print(line)
    sys.exit(0 if all(p for p, _ in results) else 1)
