"""
Graph core: the Graph type, families, operations, matrices, isomorphism and codecs.
"""

from .graph import Graph, MatrixKind
from .families import (
    complete,
    complete_bipartite,
    cycle,
    empty,
    make_family,
    path,
    petersen,
    star,
    wheel,
)
from .operations import complement, component_count, disjoint_union, is_bipartite, triangle_count
from .matrices import adjacency_matrix, build_matrix, degree_matrix, numeric_matrix, spanning_tree_count
from .isomorphism import are_isomorphic, find_isomorphism, invariant_key, refine
from .codecs import from_graph6, from_json, to_dot, to_graph6, to_json
from .spec_parser import parse_graph_spec, try_parse_graph_spec

__all__ = [
    "Graph",
    "MatrixKind",
    "complete",
    "complete_bipartite",
    "cycle",
    "empty",
    "make_family",
    "path",
    "petersen",
    "star",
    "wheel",
    "complement",
    "component_count",
    "disjoint_union",
    "is_bipartite",
    "triangle_count",
    "adjacency_matrix",
    "build_matrix",
    "degree_matrix",
    "numeric_matrix",
    "spanning_tree_count",
    "are_isomorphic",
    "find_isomorphism",
    "invariant_key",
    "refine",
    "from_graph6",
    "from_json",
    "to_dot",
    "to_graph6",
    "to_json",
    "parse_graph_spec",
    "try_parse_graph_spec",
]
