"""
Whole-graph operations and cheap invariants, computed on the networkx view of a graph.
"""

import networkx as nx

from .graph import Graph


def complement(graph: Graph) -> Graph:
    return Graph.from_networkx(nx.complement(graph.to_networkx()))


def disjoint_union(*graphs: Graph) -> Graph:
    """Union with the vertices of each graph shifted past the previous ones."""
    if not graphs:
        return Graph.empty(0)
    return Graph.from_networkx(nx.disjoint_union_all([g.to_networkx() for g in graphs]))


def is_bipartite(graph: Graph) -> bool:
    return nx.is_bipartite(graph.to_networkx())


def component_count(graph: Graph) -> int:
    return nx.number_connected_components(graph.to_networkx())


def triangle_count(graph: Graph) -> int:
    return sum(nx.triangles(graph.to_networkx()).values()) // 3
