import random

import pytest

from backbone import oracle
from backbone.connectivity import is_k_connected, vertex_connectivity
from backbone.graph import Graph
from helpers import complete, cycle


def test_brute_kappa_small_cases():
    assert oracle.brute_kappa(complete(5)) == 4
    assert oracle.brute_kappa(cycle(5)) == 2
    assert oracle.brute_kappa(Graph.from_edges(3, [(0, 1)])) == 0
    assert oracle.brute_kappa(oracle.petersen()) == 3
    with pytest.raises(ValueError):
        oracle.brute_kappa(complete(oracle.BRUTE_KAPPA_MAX_N + 1))


def test_spanning_bipartite_search():
    ok, p = oracle.exists_spanning_bipartite_k_connected(complete(8), 3)
    assert ok and 0 in p.side_a
    assert oracle.exists_spanning_bipartite_k_connected(complete(8), 4)[0]
    assert not oracle.exists_spanning_bipartite_k_connected(complete(8), 5)[0]
    assert not oracle.exists_spanning_bipartite_k_connected(cycle(5), 2)[0]
    assert oracle.exists_spanning_bipartite_k_connected(cycle(6), 2)[0]


def test_search_is_monotone_in_k():
    rng = random.Random(1)
    for _ in range(60):
        g = oracle.random_small_graph(rng, 9)
        answers = [oracle.exists_spanning_bipartite_k_connected(g, k)[0] for k in range(1, 5)]
        for lo, hi in zip(answers, answers[1:]):
            assert lo or not hi


@pytest.mark.parametrize("family, params, n, m", [
    ("complete", {"n": 6}, 6, 15),
    ("hypercube", {"d": 4}, 16, 32),
    ("complete_bipartite", {"a": 3, "b": 4}, 7, 12),
    ("random_regular", {"n": 12, "d": 5}, 12, 30),
    ("tree", {"n": 9}, 9, 8),
])
def test_generator_shapes(family, params, n, m):
    g = oracle.generate(oracle.GeneratorSpec(family, params, 3))
    assert (g.n, g.m) == (n, m)


def test_generators_are_deterministic():
    spec = oracle.GeneratorSpec("gnp", {"n": 30, "p": 0.5}, 7)
    assert oracle.generate(spec) == oracle.generate(spec)
    blobs = oracle.GeneratorSpec("two_blobs_bridged", {"blob_size": 8, "k": 3, "bridge": 2}, 4)
    assert oracle.generate(blobs) == oracle.generate(blobs)


def test_generator_errors():
    with pytest.raises(ValueError):
        oracle.generate(oracle.GeneratorSpec("gnp", {"n": 5, "p": 1.5}))
    with pytest.raises(ValueError):
        oracle.generate(oracle.GeneratorSpec("gnp", {"n": 5}))
    with pytest.raises(ValueError):
        oracle.GeneratorSpec("wheel", {})
    with pytest.raises(ValueError):
        oracle.random_regular(5, 3)


def test_two_blobs_shape():
    g = oracle.two_blobs_bridged(10, 3, 2, seed=5)
    a, b = g.induced(range(10)), g.induced(range(10, 20))
    assert is_k_connected(a, 3) and is_k_connected(b, 3)
    assert vertex_connectivity(g)[0] <= 2


def test_harary_connectivity():
    for k in (2, 3, 4, 5):
        for n in range(k + 1, 13):
            assert oracle.brute_kappa(oracle.harary(k, n)) == k


def test_dense_regular_graphs_use_the_complement():
    g = oracle.random_regular(10, 8, seed=1)
    assert all(g.degree(v) == 8 for v in g)
