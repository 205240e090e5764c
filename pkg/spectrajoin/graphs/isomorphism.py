"""
Isomorphism testing by colour refinement and individualisation.

Both graphs are refined to equitable ordered partitions with a
label-independent splitting rule. Corresponding cells are then individualised
in step, and branches whose quotient structure differs are cut. A leaf yields
a candidate bijection that is checked edge by edge before it is returned.
"""

import logging
from typing import List, Optional, Sequence, Tuple

from .graph import Graph

logger = logging.getLogger(__name__)

Partition = List[List[int]]


def refine(masks: Sequence[int], cells: Partition) -> Partition:
    """Refine an ordered partition until it is equitable.

    Each cell is split by the vector of neighbour counts into every current
    cell; the pieces are ordered by that vector, so the result does not depend
    on vertex labels.
    """
    cells = [list(c) for c in cells]
    while True:
        cell_masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            cell_masks.append(m)

        refined: Partition = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                refined.append(cell)
                continue
            groups = {}
            for v in cell:
                signature = tuple((masks[v] & cm).bit_count() for cm in cell_masks)
                groups.setdefault(signature, []).append(v)
            if len(groups) > 1:
                changed = True
            refined.extend(groups[sig] for sig in sorted(groups))
        cells = refined
        if not changed:
            return cells


def quotient(masks: Sequence[int], cells: Partition) -> Tuple:
    """Cell sizes plus neighbour counts between cells of an equitable partition."""
    cell_masks = []
    for cell in cells:
        m = 0
        for v in cell:
            m |= 1 << v
        cell_masks.append(m)
    return tuple(
        (len(cell), tuple((masks[cell[0]] & cm).bit_count() for cm in cell_masks))
        for cell in cells
    )


def _individualise(cells: Partition, index: int, vertex: int) -> Partition:
    rest = [v for v in cells[index] if v != vertex]
    return cells[:index] + [[vertex], rest] + cells[index + 1:]


def _target_cell(cells: Partition) -> int:
    """First non-singleton cell of least size."""
    best = None
    for i, cell in enumerate(cells):
        if len(cell) > 1 and (best is None or len(cell) < len(cells[best])):
            best = i
    return best


def _is_isomorphism(g: Graph, h: Graph, mapping: Sequence[int]) -> bool:
    return all(h.has_edge(mapping[u], mapping[v]) for u, v in g.edges())


def find_isomorphism(g: Graph, h: Graph) -> Optional[List[int]]:
    """A bijection ``p`` with ``uv in E(g) <=> p[u]p[v] in E(h)``, or None."""
    if g.n != h.n or g.edge_count != h.edge_count:
        return None
    if g.degree_sequence() != h.degree_sequence():
        return None
    if g.n == 0:
        return []

    gm, hm = g.bitmasks(), h.bitmasks()
    g_cells = refine(gm, [list(range(g.n))])
    h_cells = refine(hm, [list(range(h.n))])
    if quotient(gm, g_cells) != quotient(hm, h_cells):
        return None

    nodes = 0

    def search(gc: Partition, hc: Partition) -> Optional[List[int]]:
        nonlocal nodes
        nodes += 1
        index = _target_cell(gc)
        if index is None:
            mapping = [0] * g.n
            for a, b in zip(gc, hc):
                mapping[a[0]] = b[0]
            return mapping if _is_isomorphism(g, h, mapping) else None

        vertex = gc[index][0]
        g_next = refine(gm, _individualise(gc, index, vertex))
        g_shape = quotient(gm, g_next)
        for candidate in hc[index]:
            h_next = refine(hm, _individualise(hc, index, candidate))
            if quotient(hm, h_next) != g_shape:
                continue
            found = search(g_next, h_next)
            if found is not None:
                return found
        return None

    result = search(g_cells, h_cells)
    logger.debug(f"isomorphism search visited {nodes} nodes, found={result is not None}")
    return result


def are_isomorphic(g: Graph, h: Graph) -> Tuple[bool, Optional[List[int]]]:
    """Decide isomorphism; the witness maps g's vertex v to h's vertex witness[v]."""
    mapping = find_isomorphism(g, h)
    return mapping is not None, mapping


def invariant_key(graph: Graph) -> Tuple:
    """An isomorphism invariant for bucketing candidates before a full test.

    Combines the equitable partition quotient with the sorted per-vertex
    profile of triangle counts and common-neighbour counts.
    """
    masks = graph.bitmasks()
    cells = refine(masks, [list(range(graph.n))])
    profile = []
    for v in range(graph.n):
        common = sorted((masks[v] & masks[u]).bit_count() for u in range(graph.n) if u != v)
        triangles = sum((masks[v] & masks[u]).bit_count() for u in graph.neighbours[v]) // 2
        profile.append((triangles, tuple(common)))
    return quotient(masks, cells), tuple(sorted(profile))
