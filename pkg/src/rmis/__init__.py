"""Robust maximal independent sets: decision, construction and brute-force checks.

A maximal independent set is robust when it stays maximal in every
connected spanning subgraph of the graph.
"""

from .classification import Robustness, RobustnessClass, all_mis_robust, classify, is_complete_bipartite, is_sputnik
from .construction import bipartite_rmis, construct, extract_rmis, greedy_mis
from .decomposition import AbcTree, BlockAnalysis, NodeKind, analyze_blocks, build_abc_tree, is_biconnected
from .graph import Graph, GraphError, bipartition, connected_components, induced_subgraph, is_connected, new_graph, remove_edges
from .labeling import ComponentProblem, Decision, LabelSet, decide, is_satisfiable
from .oracle import enumerate_mis, exists_rmis_bf, forall_rmis_bf, is_robust_mis, is_robust_mis_exhaustive

__version__ = "0.1.0"
