"""
Finite simple undirected graphs on vertices 0..n-1.
"""

from dataclasses import dataclass
from enum import Enum
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from ..core.exceptions import GraphException, ValidationException


class MatrixKind(str, Enum):
    """The four graph matrices: adjacency, Laplacian, signless, normalized."""

    A = "A"
    L = "L"
    Q = "Q"
    NL = "NL"

    @classmethod
    def parse(cls, value: str) -> "MatrixKind":
        try:
            return cls(value.strip().upper())
        except ValueError:
            raise ValidationException(
                f"Invalid matrix kind: {value}. Allowed: {', '.join(k.value for k in cls)}"
            )


@dataclass(frozen=True)
class Graph:
    """Simple graph stored as one neighbour set per vertex.

    Construct with :meth:`from_edges`; the neighbour sets are validated to be
    symmetric and loop-free.
    """

    n: int
    neighbours: Tuple[FrozenSet[int], ...]

    def __post_init__(self):
        if self.n < 0:
            raise GraphException(f"Vertex count must be >= 0, got {self.n}")
        if len(self.neighbours) != self.n:
            raise GraphException(
                f"Expected {self.n} neighbour sets, got {len(self.neighbours)}"
            )
        for v, nbrs in enumerate(self.neighbours):
            if v in nbrs:
                raise GraphException(f"Loop on vertex {v}")
            for u in nbrs:
                if not 0 <= u < self.n:
                    raise GraphException(f"Vertex {u} outside 0..{self.n - 1}")
                if v not in self.neighbours[u]:
                    raise GraphException(f"Asymmetric adjacency between {v} and {u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]]) -> "Graph":
        """Build a graph from an edge list; duplicate edges collapse.

        Raises:
            GraphException: On loops or endpoints outside 0..n-1.
        """
        if n < 0:
            raise GraphException(f"Vertex count must be >= 0, got {n}")
        adjacency: List[set] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise GraphException(f"Loop on vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphException(f"Edge ({u}, {v}) outside 0..{n - 1}")
            adjacency[u].add(v)
            adjacency[v].add(u)
        return cls(n, tuple(frozenset(s) for s in adjacency))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls.from_edges(n, ())

    @classmethod
    def from_networkx(cls, g: nx.Graph) -> "Graph":
        """Freeze a networkx graph.

        Nodes already labelled 0..n-1 keep their labels; any other labels are
        renumbered in node iteration order.
        """
        if set(g.nodes) != set(range(g.number_of_nodes())):
            g = nx.convert_node_labels_to_integers(g)
        return cls.from_edges(g.number_of_nodes(), g.edges())

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges())
        return g

    # ------------------------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.neighbours[u]

    def degree(self, v: int) -> int:
        return len(self.neighbours[v])

    def degrees(self) -> List[int]:
        return [len(nbrs) for nbrs in self.neighbours]

    def degree_sequence(self) -> List[int]:
        """Degrees in non-increasing order."""
        return sorted(self.degrees(), reverse=True)

    def edges(self) -> List[Tuple[int, int]]:
        """Edges (i, j) with i < j in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in sorted(self.neighbours[u]) if u < v]

    @property
    def edge_count(self) -> int:
        return sum(self.degrees()) // 2

    def is_regular(self) -> Optional[int]:
        """The common degree, or None if degrees differ or the graph is empty."""
        if self.n == 0:
            return None
        degrees = set(self.degrees())
        return degrees.pop() if len(degrees) == 1 else None

    def bitmasks(self) -> List[int]:
        """Neighbour sets as integer bitmasks."""
        return [sum(1 << u for u in nbrs) for nbrs in self.neighbours]

    def relabel(self, mapping: Sequence[int]) -> "Graph":
        """The graph with vertex v renamed mapping[v]."""
        if sorted(mapping) != list(range(self.n)):
            raise GraphException("Relabelling must be a permutation of 0..n-1")
        return Graph.from_edges(self.n, ((mapping[u], mapping[v]) for u, v in self.edges()))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"
