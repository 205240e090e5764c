"""
Graph spec mini-language used on the command line.

    K4          complete graph            K1,4     complete bipartite
    P4 C4 E3    path, cycle, empty        S4       star K1,4
    W5          wheel on 6 vertices       Petersen
    2K3         two disjoint copies       C4+K1    disjoint union
    g6:Cx       a literal graph6 string
"""

import re

from ..core.exceptions import SpectraJoinException, ValidationException
from ..core.result import Result
from .codecs import from_graph6
from .families import make_family
from .graph import Graph
from .operations import disjoint_union

_TERM = re.compile(r"^(\d*)(K|P|C|E|S|W)(\d+)(?:,(\d+))?$")


def _parse_term(term: str) -> Result[Graph]:
    if term.startswith("g6:"):
        try:
            return Result.ok(from_graph6(term[3:]))
        except SpectraJoinException as e:
            return Result.err(str(e))
    if term == "Petersen":
        return Result.ok(make_family("Petersen"))

    match = _TERM.match(term)
    if not match:
        return Result.err(f"Cannot parse graph term {term!r}")
    count, name, first, second = match.groups()
    if second is not None and name != "K":
        return Result.err(f"Only K takes two parameters: {term!r}")
    params = (int(first),) if second is None else (int(first), int(second))
    try:
        graph = make_family(name, *params)
    except ValidationException as e:
        return Result.err(str(e))
    copies = int(count) if count else 1
    if copies < 1:
        return Result.err(f"Copy count must be >= 1 in {term!r}")
    return Result.ok(disjoint_union(*([graph] * copies)))


def try_parse_graph_spec(text: str) -> Result[Graph]:
    """Parse a spec such as ``"C4+K1"`` into a graph, or an Err explaining why not."""
    terms = [t.strip() for t in text.split("+")]
    if not text.strip() or any(not t for t in terms):
        return Result.err(f"Empty term in graph spec {text!r}")
    parts = []
    for term in terms:
        parsed = _parse_term(term)
        if parsed.is_err():
            return parsed
        parts.append(parsed.unwrap())
    return Result.ok(parts[0] if len(parts) == 1 else disjoint_union(*parts))


def parse_graph_spec(text: str) -> Graph:
    """Like :func:`try_parse_graph_spec` but raising ValidationException."""
    result = try_parse_graph_spec(text)
    if result.is_err():
        raise ValidationException(result.reason)
    return result.unwrap()
