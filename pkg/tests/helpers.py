"""Small graphs and hypothesis strategies shared by the test modules."""

from itertools import combinations

from hypothesis import strategies as st

from backbone.graph import Digraph, Graph


def complete(n):
    return Graph.from_edges(n, combinations(range(n), 2))


def cycle(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star(leaves):
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def shifted(g, offset):
    return Graph([v + offset for v in g.vertices], [(u + offset, v + offset) for u, v in g.edges])


def complete_symmetric_digraph(vertices):
    vs = list(vertices)
    return Digraph(vs, [(u, v) for u in vs for v in vs if u != v])


@st.composite
def graphs(draw, min_n=0, max_n=10):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


@st.composite
def digraphs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    arcs = [(u, v) for u in range(n) for v in range(n) if u != v]
    chosen = draw(st.lists(st.sampled_from(arcs), unique=True)) if arcs else []
    return Digraph(range(n), chosen)
