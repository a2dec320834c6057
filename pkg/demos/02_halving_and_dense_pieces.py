"""
Locally maximal cuts and dense highly connected subgraphs
=========================================================

"""

from backbone import oracle
from backbone.bipartize import halved_degree_subgraph, local_max_cut, weakest_cut_ratio
from backbone.graph import Graph, average_degree
from backbone.mader import bipartite_dense_k_connected_subgraph, dense_k_connected_subgraph

# a locally maximal cut: no vertex gains by switching sides
g = oracle.gnp(40, 0.5, seed=3)
cut = local_max_cut(g, seed=1)
print(f"{g}: cut keeps {cut.cut_size} of {g.m} edges after {cut.moves_performed} moves")

# so the cross subgraph keeps half of every degree
h, part = halved_degree_subgraph(g, seed=1)
worst = min(h.degree(v) / g.degree(v) for v in g.vertices if g.degree(v))
print("worst kept fraction of a degree:", round(worst, 3))

# with a true maximum cut (small graphs only) every edge cut keeps half too
small = oracle.gnp(11, 0.6, seed=4)
hs, _ = halved_degree_subgraph(small, mode="exhaustive")
print("violating subset:", weakest_cut_ratio(small, hs))

# average degree >= 4l forces an l-connected subgraph; watch the descent on two
# dense blobs joined by one edge, with a path hanging off the second blob
a, b = oracle.gnp(30, 0.7, seed=1), oracle.gnp(30, 0.7, seed=2)
edges = [*a.edges, *((u + 30, v + 30) for u, v in b.edges), (0, 30), (59, 60)]
edges += [(60 + i, 61 + i) for i in range(9)]
g = Graph(range(70), edges)
print("average degree", float(average_degree(g)))
w = dense_k_connected_subgraph(g, 3)
print("candidate sizes during descent:", w.trace)
print("found a", w.verified_kappa, "-connected subgraph on", len(w.subgraph_vertices), "vertices")

# the bipartite version needs average degree >= 8l
w, part = bipartite_dense_k_connected_subgraph(oracle.gnp(70, 0.5, seed=9), 3, seed=2)
print("bipartite piece sides:", len(part.side_a), "+", len(part.side_b))
