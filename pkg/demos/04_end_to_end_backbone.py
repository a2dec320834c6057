"""
A spanning bipartite k-connected subgraph, end to end
=====================================================

"""

from backbone import oracle
from backbone.certificate import FailureReport, RunManifest, format_certificate
from backbone.graph import Graph
from backbone.pipeline import Piece, PipelineConfig, backbone, claim_violations, run_round

# desk-scale settings: thresholds scaled down to graphs of a few dozen vertices
g = oracle.gnp(30, 0.6, seed=5)
cfg = PipelineConfig.desk(3, g.n, seed=1)
print("size threshold", cfg.size_threshold, "matching target", cfg.matching_target)

# a certificate is re-verified before it is returned
cert = backbone(g, cfg)
print("spanning bipartite subgraph with", cert.subgraph.m, "of", g.m, "edges, kappa",
      cert.verified_kappa)
text = format_certificate(cert, RunManifest("demo", "<memory>", 1), cfg.as_dict())
print(text.splitlines()[:8], "...")

# a graph that cannot work is reported with its stage
report = backbone(oracle.tree(15, 0), PipelineConfig.desk(2, 15))
print("tree:", report.stage, dict(report.detail))

# the full round machinery: two K_{8,8} blocks that never touch, and a K12 that
# touches each block once per vertex; no single exchange move joins them
edges = [(a, b) for a in range(8) for b in range(8, 16)]
edges += [(a, b) for a in range(16, 24) for b in range(24, 32)]
clique = list(range(32, 44))
edges += [(a, b) for i, a in enumerate(clique) for b in clique[i + 1:]]
for j, v in enumerate(clique):
    edges += [(v, j), (v, 16 + j)]
g = Graph(range(44), edges)
pieces = [Piece(frozenset(range(8)), frozenset(range(8, 16))),
          Piece(frozenset(range(16, 24)), frozenset(range(24, 32)))]
print("claims at the start:", claim_violations(g, pieces, 2))

cfg = PipelineConfig(k=2, size_threshold=16, degree_split_threshold=5, matching_target=12,
                     thinned_size=12, touch_threshold=5, b_degree_threshold=5,
                     a_piece_threshold=2, seed=0)
result, dec = run_round(g, cfg, pieces, frozenset(clique), 1)
print("leftover split A/B:", sorted(dec.split[0]), sorted(dec.split[1]))
print("auxiliary digraph:", dec.aux_digraph)
if isinstance(result, FailureReport):
    print("round failed:", result.stage, dict(result.detail))
else:
    print("after folding:", [len(p) for p in result], "vertices in pieces")
