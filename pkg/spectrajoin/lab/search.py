"""
Exhaustive search for non-isomorphic A-cospectral r-regular graphs.

All r-regular graphs on n vertices are reached from one seed by double-edge
switches. Any two simple graphs with the same degree sequence are linked by a
chain of switches that never creates a loop or a multi-edge, so the labelled
switch closure of the seed is every r-regular graph on n vertices. Walking
only one representative per class loses nothing: relabelling commutes with
switching, so the switches of an isomorphic copy are copies of the
representative's switches. Candidates are bucketed by an invariant and tested
against that bucket with the full isomorphism search. Classes are then
bucketed by exact adjacency charpoly.
"""

import logging
from collections import defaultdict, deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from ..algebra import Poly
from ..core.exceptions import SearchException, ValidationException
from ..core.validators import SearchSizeValidator
from ..graphs.graph import Graph, MatrixKind
from ..graphs.isomorphism import find_isomorphism, invariant_key
from ..spectra.numeric import exact_charpoly

logger = logging.getLogger(__name__)

Mapper = Callable[[Callable, Sequence], List]


@dataclass(frozen=True)
class SearchResult:
    """Isomorphism class representatives and the cospectral pairs among them."""

    n: int
    r: int
    graphs: Tuple[Graph, ...]
    pairs: Tuple[Tuple[int, int], ...] = field(default_factory=tuple)

    @property
    def class_count(self) -> int:
        return len(self.graphs)

    def pair_graphs(self) -> List[Tuple[Graph, Graph]]:
        return [(self.graphs[i], self.graphs[j]) for i, j in self.pairs]


def seed_regular_graph(n: int, r: int) -> Optional[Graph]:
    """First r-regular graph on n vertices in lexicographic backtracking order.

    Vertex v takes its missing edges from later vertices that still have
    spare degree.
    """
    if (n * r) % 2 or not 0 <= r < max(n, 1):
        return None
    need = [r] * n
    edges: List[Tuple[int, int]] = []

    def place(v: int) -> bool:
        if v == n:
            return True
        candidates = [w for w in range(v + 1, n) if need[w] > 0]
        for chosen in combinations(candidates, need[v]):
            for w in chosen:
                need[w] -= 1
            edges.extend((v, w) for w in chosen)
            missing, need[v] = need[v], 0
            if place(v + 1):
                return True
            need[v] = missing
            del edges[len(edges) - len(chosen):]
            for w in chosen:
                need[w] += 1
        return False

    return Graph.from_edges(n, edges) if place(0) else None


def double_edge_switches(graph: Graph) -> Iterable[Graph]:
    """Every graph one switch away: ab, cd become ac, bd or ad, bc."""
    edges = graph.edges()
    edge_set = set(edges)
    for (a, b), (c, d) in combinations(edges, 2):
        if len({a, b, c, d}) < 4:
            continue
        for (p, q), (s, t) in (((a, c), (b, d)), ((a, d), (b, c))):
            if _key(p, q) in edge_set or _key(s, t) in edge_set:
                continue
            rest = [e for e in edges if e != (a, b) and e != (c, d)]
            yield Graph.from_edges(graph.n, rest + [_key(p, q), _key(s, t)])


def _key(u: int, v: int) -> Tuple[int, int]:
    return (u, v) if u < v else (v, u)


class _ClassIndex:
    """Isomorphism-class representatives bucketed by invariant."""

    def __init__(self):
        self.graphs: List[Graph] = []
        self._buckets: Dict[Tuple, List[int]] = defaultdict(list)

    def add(self, graph: Graph) -> bool:
        """Insert unless an isomorphic representative exists; True when new."""
        key = invariant_key(graph)
        for index in self._buckets[key]:
            if find_isomorphism(graph, self.graphs[index]) is not None:
                return False
        self._buckets[key].append(len(self.graphs))
        self.graphs.append(graph)
        return True


def regular_graph_classes(n: int, r: int) -> List[Graph]:
    """One representative per isomorphism class of r-regular graphs on n vertices."""
    seed = seed_regular_graph(n, r)
    if seed is None:
        return []
    index = _ClassIndex()
    index.add(seed)
    queue = deque([seed])
    while queue:
        current = queue.popleft()
        for neighbour in double_edge_switches(current):
            if index.add(neighbour):
                queue.append(neighbour)
        logger.debug(f"switch closure n={n} r={r}: {len(index.graphs)} classes, {len(queue)} queued")
    logger.info(f"{len(index.graphs)} isomorphism classes of {r}-regular graphs on {n} vertices")
    return index.graphs


def adjacency_charpoly(graph: Graph) -> Poly:
    return exact_charpoly(graph, MatrixKind.A)


def find_regular_cospectral_pairs(
    n: int, r: int, mapper: Optional[Mapper] = None, max_vertices: int = 10
) -> SearchResult:
    """All non-isomorphic A-cospectral pairs of r-regular graphs on n vertices.

    Args:
        n: Order, at most ``max_vertices``.
        r: Degree, 0 <= r < n.
        mapper: ``mapper(fn, items)`` returning results in order; lets callers
            spread the charpoly work across processes. Defaults to serial.
        max_vertices: Search size limit.

    Raises:
        SearchException: If (n, r) is out of range.
    """
    try:
        SearchSizeValidator.validate_size(n, r, max_vertices)
    except ValidationException as e:
        raise SearchException(str(e)) from e

    classes = regular_graph_classes(n, r)
    if len(classes) < 2:
        return SearchResult(n, r, tuple(classes))

    mapper = mapper or (lambda fn, items: [fn(item) for item in items])
    polys = mapper(adjacency_charpoly, classes)
    buckets: Dict[Poly, List[int]] = defaultdict(list)
    for index, poly in enumerate(polys):
        buckets[poly].append(index)

    pairs = []
    for members in buckets.values():
        pairs.extend(combinations(members, 2))
    pairs.sort()
    if pairs:
        logger.info(f"✓ n={n} r={r}: {len(pairs)} cospectral non-isomorphic pair(s)")
    else:
        logger.info(f"n={n} r={r}: every class is determined by its spectrum")
    return SearchResult(n, r, tuple(classes), tuple(pairs))
