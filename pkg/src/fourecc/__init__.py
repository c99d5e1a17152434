"""4-edge-connected components and all 3-edge cuts of multigraphs in linear time."""

from .cuts import DETERMINISTIC, RANDOMIZED, enumerate_3cuts
from .cuttree import CutTree, build_cut_tree
from .dfs import GraphPreconditionError
from .graph import GraphParseError, Labeling, Multigraph, load_graph, parse_graph
from .reduction import four_ecc, solve_3ecc, three_ecc_labels

__all__ = [
    "CutTree", "DETERMINISTIC", "GraphParseError", "GraphPreconditionError", "Labeling",
    "Multigraph", "RANDOMIZED", "build_cut_tree", "enumerate_3cuts", "four_ecc",
    "load_graph", "parse_graph", "solve_3ecc", "three_ecc_labels",
]
