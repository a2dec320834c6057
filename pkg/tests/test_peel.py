import random

import pytest

from backbone.connectivity import is_k_connected
from backbone.errors import PreconditionError
from backbone.graph import Digraph, underlying_graph
from backbone.peel import ceil_log2, degree_budget, peel_to_k_connected
from helpers import complete_symmetric_digraph


def test_ceil_log2():
    assert [ceil_log2(n) for n in (1, 2, 3, 4, 5, 8, 9, 64, 65)] == [0, 1, 2, 2, 3, 3, 4, 6, 7]


def test_already_connected_is_untouched():
    d = complete_symmetric_digraph(range(8))
    out, trace = peel_to_k_connected(d, 3)
    assert out == d and len(trace) == 0


def test_two_blobs_with_a_bottleneck():
    # two symmetric K8 blobs sharing vertex 7
    d = Digraph(range(15), [*complete_symmetric_digraph(range(8)).arcs,
                            *complete_symmetric_digraph(range(7, 15)).arcs])
    out, trace = peel_to_k_connected(d, 2)
    assert len(trace) == 1 and trace.steps[0].separator == {7}
    assert out.vertices in ({*range(7)}, {*range(8, 15)})
    assert is_k_connected(underlying_graph(out), 2)
    budget = degree_budget(15, 2)
    assert all(out.out_degree(v) >= d.out_degree(v) - budget for v in out.vertices)


def test_precondition():
    d = Digraph(range(3), [(0, 1), (1, 2), (2, 0)])
    with pytest.raises(PreconditionError):
        peel_to_k_connected(d, 2)
    with pytest.raises(PreconditionError):
        peel_to_k_connected(Digraph(), 1)


def test_random_clustered_digraphs():
    rng = random.Random(4)
    for _ in range(30):
        k = rng.choice((2, 3))
        clusters = rng.randint(2, 3)
        size = rng.randint(10, 14)
        n = clusters * size
        need = degree_budget(n, k) + 1
        arcs = set()
        for c in range(clusters):
            members = range(c * size, (c + 1) * size)
            for v in members:
                for w in rng.sample([w for w in members if w != v], min(size - 1, need + 2)):
                    arcs.add((v, w))
        for c in range(clusters - 1):
            for _ in range(k - 1):
                arcs.add((rng.randrange(c * size, (c + 1) * size),
                          rng.randrange((c + 1) * size, (c + 2) * size)))
        d = Digraph(range(n), arcs)
        if d.min_out_degree() <= degree_budget(n, k):
            continue
        out, trace = peel_to_k_connected(d, k)
        assert len(trace) <= ceil_log2(n)
        assert is_k_connected(underlying_graph(out), k)
        for step in trace.steps:
            assert len(step.separator) <= k - 1
