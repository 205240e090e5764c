"""
Standard graph families, built with the networkx generators.
"""

import networkx as nx

from ..core.exceptions import ValidationException
from .graph import Graph


def _positive(name: str, value: int, minimum: int = 1) -> int:
    if not isinstance(value, int) or value < minimum:
        raise ValidationException(f"{name} needs an integer >= {minimum}, got {value}")
    return value


def complete(n: int) -> Graph:
    _positive("K_n", n)
    return Graph.from_networkx(nx.complete_graph(n))


def path(n: int) -> Graph:
    _positive("P_n", n)
    return Graph.from_networkx(nx.path_graph(n))


def cycle(n: int) -> Graph:
    _positive("C_n", n, minimum=3)
    return Graph.from_networkx(nx.cycle_graph(n))


def empty(n: int) -> Graph:
    _positive("E_n", n)
    return Graph.from_networkx(nx.empty_graph(n))


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b} with the a-side on vertices 0..a-1."""
    _positive("K_a,b", a)
    _positive("K_a,b", b)
    return Graph.from_networkx(nx.complete_bipartite_graph(a, b))


def star(n: int) -> Graph:
    """K_{1,n}: a centre (vertex 0) joined to n leaves."""
    _positive("S_n", n)
    return Graph.from_networkx(nx.star_graph(n))


def wheel(n: int) -> Graph:
    """A hub (vertex 0) joined to every vertex of C_n on 1..n."""
    _positive("W_n", n, minimum=3)
    return Graph.from_networkx(nx.wheel_graph(n + 1))


def petersen() -> Graph:
    """Outer 5-cycle on 0..4, inner pentagram on 5..9, spokes i -- i+5."""
    return Graph.from_networkx(nx.petersen_graph())


FAMILIES = {
    "K": complete,
    "P": path,
    "C": cycle,
    "E": empty,
    "S": star,
    "W": wheel,
}


def make_family(name: str, *params: int) -> Graph:
    """Build a family member by name, e.g. ``make_family("K", 4)``.

    ``K`` with two parameters is the complete bipartite graph.

    Raises:
        ValidationException: Unknown name, wrong arity or a non-positive parameter.
    """
    if name == "Petersen":
        if params:
            raise ValidationException("Petersen takes no parameters")
        return petersen()
    if name == "K" and len(params) == 2:
        return complete_bipartite(*params)
    if name not in FAMILIES:
        raise ValidationException(
            f"Unknown graph family: {name}. Allowed: {', '.join(sorted(FAMILIES))}, Petersen"
        )
    if len(params) != 1:
        raise ValidationException(f"{name} takes exactly one parameter, got {len(params)}")
    return FAMILIES[name](params[0])
