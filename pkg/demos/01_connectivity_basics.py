"""
Vertex connectivity, separators and matchings
=============================================

"""

from backbone import oracle
from backbone.connectivity import (edge_connectivity, is_k_connected, max_bipartite_matching,
                                   st_disjoint_paths, vertex_connectivity)
from backbone.graph import Bipartition

# the Petersen graph: 3-regular and 3-connected
g = oracle.petersen()
kappa, witness = vertex_connectivity(g)
print("kappa(Petersen) =", kappa, "cut", sorted(witness.cut), "cuts off", sorted(witness.side_small))

# the brute-force oracle agrees
print("brute force says", oracle.brute_kappa(g))

# Menger: three internally disjoint paths between two non-adjacent vertices
count, paths = st_disjoint_paths(g, 0, 7)
for p in paths:
    print("  path", p)

# a "no" answer from is_k_connected carries its evidence
check = is_k_connected(g, 4)
print("4-connected?", bool(check), "separator", sorted(check.witness.cut))

# edge connectivity is never below vertex connectivity
lam, cut = edge_connectivity(g)
print("lambda =", lam, "crossing edges", sorted(cut.crossing_edges))

# Konig: in a bipartite graph, max matching = min vertex cover
q3 = oracle.hypercube(3)
part = q3.two_coloring()
m, cover = max_bipartite_matching(q3, part)
print("Q3 matching", len(m), "cover", sorted(cover.cover))
assert isinstance(part, Bipartition)
