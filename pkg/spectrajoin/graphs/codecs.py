"""
graph6, JSON and DOT text forms of a graph.

graph6 goes through networkx; the frozen Graph stays the boundary type.
"""

import json

import networkx as nx

from ..config import settings
from ..core.exceptions import CodecException
from .graph import Graph

GRAPH6_HEADER = ">>graph6<<"


def to_graph6(graph: Graph) -> str:
    """graph6 line for ``graph`` without header or trailing newline.

    Raises:
        CodecException: Above ``settings.GRAPH6_MAX_VERTICES`` vertices.
    """
    if graph.n > settings.GRAPH6_MAX_VERTICES:
        raise CodecException(
            f"graph6 cannot encode {graph.n} vertices (max {settings.GRAPH6_MAX_VERTICES})"
        )
    return nx.to_graph6_bytes(graph.to_networkx(), header=False).decode("ascii").strip()


def from_graph6(text: str) -> Graph:
    """Decode one graph6 line.

    Raises:
        CodecException: On characters outside 63..126, a bad size field or a
            payload of the wrong length.
    """
    data = text.strip()
    if data.startswith(GRAPH6_HEADER):
        data = data[len(GRAPH6_HEADER):]
    if not data:
        raise CodecException("Empty graph6 string")
    for ch in data:
        if not 63 <= ord(ch) <= 126:
            raise CodecException(f"Invalid graph6 character {ch!r}")
    if data[0] == "~" and (len(data) < 4 or data[1] == "~"):
        raise CodecException(f"graph6 sizes above {settings.GRAPH6_MAX_VERTICES} are not supported")

    try:
        return Graph.from_networkx(nx.from_graph6_bytes(data.encode("ascii")))
    except (nx.NetworkXError, ValueError) as e:
        raise CodecException(f"Invalid graph6 string {data!r}: {e}")
def to_json(graph: Graph) -> str:
    from ..schemas import GraphSchema

    return json.dumps(GraphSchema().dump(graph))


def from_json(text: str) -> Graph:
    """Decode ``{"n": ..., "edges": [[i, j], ...]}``.

    Raises:
        CodecException: On malformed JSON or a document failing validation.
    """
    from marshmallow import ValidationError

    from ..schemas import GraphSchema

    try:
        return GraphSchema().load(json.loads(text))
    except (json.JSONDecodeError, ValidationError) as e:
        raise CodecException(f"Invalid graph JSON: {e}")


def to_dot(graph: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    lines.extend(f"  {v};" for v in range(graph.n))
    lines.extend(f"  {u} -- {v};" for u, v in graph.edges())
    lines.append("}")
    return "\n".join(lines) + "\n"
