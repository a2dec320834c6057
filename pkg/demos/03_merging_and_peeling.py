"""
Gluing k-connected pieces, and peeling a digraph down to a k-connected core
===========================================================================

"""

from backbone import oracle
from backbone.graph import Digraph, Graph, underlying_graph
from backbone.merge import PatternGraph, PieceTuple, check_family_membership, join_two, merge_components
from backbone.peel import degree_budget, peel_to_k_connected

# two K4s and three independent edges between them give a 3-connected graph
a = oracle.complete(4)
b = Graph(range(4, 8), [(u + 4, v + 4) for u, v in a.edges])
joined = join_two(a, b, [(0, 4), (1, 5), (2, 6)], 3)
print("kappa of the join:", oracle.brute_kappa(joined))

# the same idea with a pattern graph over pieces and single vertices
t1 = oracle.complete(3)
t2 = Graph(range(3, 6), [(u + 3, v + 3) for u, v in t1.edges])
x = PieceTuple((t1, t2), (6,), 2)
r = PatternGraph(oracle.complete(3), 2)   # element 0 = t1, 1 = t2, 2 = vertex 6
available = [(0, 3), (0, 6), (1, 4), (2, 6), (4, 6), (5, 6)]
g = merge_components(x, r, available, 2)
print("assembled", g, "membership", check_family_membership(g, x, r, 2))
print("kappa:", oracle.brute_kappa(g))

# peeling: two dense blobs that share a vertex
blob = [(u, v) for u in range(8) for v in range(8) if u != v]
d = Digraph(range(15), blob + [(u + 7, v + 7) for u, v in blob])
core, trace = peel_to_k_connected(d, 2)
for step in trace.steps:
    print("removed separator", sorted(step.separator), "kept", sorted(step.chosen_component))
print("core is", core, "with kappa", oracle.brute_kappa(underlying_graph(core)))
print("out-degree budget was", degree_budget(d.n, 2))
