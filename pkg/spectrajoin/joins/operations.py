"""
Plain, neighbours-splitting (NS) and non-neighbours-splitting (NNS) joins.

For G1 on n1 vertices and G2 on n2 vertices the split joins have vertex
order u_1..u_n1 (copy of G1), u'_1..u'_n1 (splitting vertices), then
v_1..v_n2 (copy of G2): u_i is vertex i, u'_i is n1 + i, v_j is 2*n1 + j.
Every u_i is adjacent to every v_j. In the NS join u'_i is adjacent to the
neighbours of u_i; in the NNS join to its non-neighbours other than u_i.
"""

import logging
from enum import Enum
from typing import List, Tuple

from ..core.exceptions import ValidationException
from ..graphs.graph import Graph

logger = logging.getLogger(__name__)


class JoinKind(str, Enum):
    PLAIN = "plain"
    NS = "ns"
    NNS = "nns"

    @classmethod
    def parse(cls, value: str) -> "JoinKind":
        try:
            return cls(value.strip().lower())
        except ValueError:
            raise ValidationException(
                f"Invalid join kind: {value}. Allowed: {', '.join(k.value for k in cls)}"
            )


def plain_join(g1: Graph, g2: Graph) -> Graph:
    """G1 v G2: disjoint union plus every edge between the two sides."""
    n1 = g1.n
    edges = list(g1.edges())
    edges.extend((n1 + u, n1 + v) for u, v in g2.edges())
    edges.extend((i, n1 + j) for i in range(n1) for j in range(g2.n))
    return Graph.from_edges(n1 + g2.n, edges)


def _split_join(g1: Graph, g2: Graph, neighbours: bool) -> Graph:
    n1, n2 = g1.n, g2.n
    if n1 == 0:
        return g2
    offset = 2 * n1
    edges: List[Tuple[int, int]] = list(g1.edges())
    edges.extend((offset + u, offset + v) for u, v in g2.edges())
    edges.extend((i, offset + j) for i in range(n1) for j in range(n2))
    for i in range(n1):
        for j in range(n1):
            if i == j:
                continue
            if g1.has_edge(i, j) == neighbours:
                edges.append((n1 + i, j))
    return Graph.from_edges(2 * n1 + n2, edges)


def ns_join(g1: Graph, g2: Graph) -> Graph:
    """Neighbours-splitting join of G1 and G2."""
    joined = _split_join(g1, g2, neighbours=True)
    logger.debug(f"NS join: n1={g1.n}, n2={g2.n} -> {joined!r}")
    return joined


def nns_join(g1: Graph, g2: Graph) -> Graph:
    """Non-neighbours-splitting join of G1 and G2."""
    joined = _split_join(g1, g2, neighbours=False)
    logger.debug(f"NNS join: n1={g1.n}, n2={g2.n} -> {joined!r}")
    return joined


def join(kind: JoinKind, g1: Graph, g2: Graph) -> Graph:
    kind = JoinKind(kind)
    if kind is JoinKind.PLAIN:
        return plain_join(g1, g2)
    if kind is JoinKind.NS:
        return ns_join(g1, g2)
    return nns_join(g1, g2)
