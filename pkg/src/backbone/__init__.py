"""Spanning bipartite k-connected subgraphs, with every intermediate result re-verified."""

from .bipartize import LocalMaxCut, halved_degree_subgraph, local_max_cut
from .certificate import Certificate, FailureReport, RunManifest
from .connectivity import (Matching, VertexCover, VertexCutWitness, edge_connectivity,
                           is_k_connected, max_bipartite_matching, st_disjoint_paths,
                           vertex_connectivity)
from .graph import Bipartition, Digraph, EdgeCut, Graph, cross_subgraph, underlying_graph
from .io import ParseError, parse_graph, read_graph
from .mader import DenseWitness, bipartite_dense_k_connected_subgraph, dense_k_connected_subgraph
from .merge import PatternGraph, PieceTuple, check_family_membership, join_two, merge_components
from .peel import PeelTrace, peel_to_k_connected
from .pipeline import PipelineConfig, backbone

__version__ = "0.1.0"

__all__ = [
    "Bipartition", "Certificate", "DenseWitness", "Digraph", "EdgeCut", "FailureReport", "Graph",
    "LocalMaxCut", "Matching", "ParseError", "PatternGraph", "PeelTrace", "PieceTuple",
    "PipelineConfig", "RunManifest", "VertexCover", "VertexCutWitness", "backbone",
    "bipartite_dense_k_connected_subgraph", "check_family_membership", "cross_subgraph",
    "dense_k_connected_subgraph", "edge_connectivity", "halved_degree_subgraph",
    "is_k_connected", "join_two", "local_max_cut", "max_bipartite_matching", "merge_components",
    "parse_graph", "peel_to_k_connected", "read_graph", "st_disjoint_paths", "underlying_graph",
    "vertex_connectivity",
]
