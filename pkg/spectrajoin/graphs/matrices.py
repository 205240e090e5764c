"""
Matrix builders for A, L = D - A, Q = D + A and NL = I - D^{-1} A.

Isolated vertices get an all-zero row and column in NL.
"""

from fractions import Fraction

import numpy as np

from ..algebra import ExactMatrix
from .graph import Graph, MatrixKind


def adjacency_matrix(graph: Graph) -> ExactMatrix:
    return ExactMatrix(
        [1 if graph.has_edge(i, j) else 0 for j in range(graph.n)] for i in range(graph.n)
    )


def degree_matrix(graph: Graph) -> ExactMatrix:
    return ExactMatrix.diagonal(graph.degrees())


def build_matrix(graph: Graph, kind: MatrixKind) -> ExactMatrix:
    """Exact matrix of the given kind.

    Args:
        graph: Any simple graph.
        kind: A, L, Q or NL.

    Returns:
        A symmetric ExactMatrix for A, L and Q; NL is I - D^{-1}A, which is
        similar to a symmetric matrix but not itself symmetric.
    """
    kind = MatrixKind(kind)
    if kind is MatrixKind.A:
        return adjacency_matrix(graph)
    if kind is MatrixKind.L:
        return degree_matrix(graph) - adjacency_matrix(graph)
    if kind is MatrixKind.Q:
        return degree_matrix(graph) + adjacency_matrix(graph)

    rows = []
    for i in range(graph.n):
        d = graph.degree(i)
        if d == 0:
            rows.append([0] * graph.n)
            continue
        rows.append([
            1 if i == j else (-Fraction(1, d) if graph.has_edge(i, j) else 0)
            for j in range(graph.n)
        ])
    return ExactMatrix(rows)


def numeric_matrix(graph: Graph, kind: MatrixKind) -> np.ndarray:
    """Symmetric float matrix with the same spectrum as ``build_matrix``.

    NL is represented by I - D^{-1/2} A D^{-1/2}, with zero rows and columns
    for isolated vertices.
    """
    kind = MatrixKind(kind)
    n = graph.n
    a = np.zeros((n, n), dtype=float)
    for u, v in graph.edges():
        a[u, v] = a[v, u] = 1.0
    degrees = np.array(graph.degrees(), dtype=float)
    if kind is MatrixKind.A:
        return a
    if kind is MatrixKind.L:
        return np.diag(degrees) - a
    if kind is MatrixKind.Q:
        return np.diag(degrees) + a

    inv_sqrt = np.zeros(n, dtype=float)
    nonisolated = degrees > 0
    inv_sqrt[nonisolated] = 1.0 / np.sqrt(degrees[nonisolated])
    normalized = np.diag(nonisolated.astype(float)) - inv_sqrt[:, None] * a * inv_sqrt[None, :]
    return normalized


def spanning_tree_count(graph: Graph) -> int:
    """Number of spanning trees: any cofactor of the Laplacian."""
    if graph.n <= 1:
        return 1
    laplacian = build_matrix(graph, MatrixKind.L)
    keep = list(range(1, graph.n))
    return int(laplacian.submatrix(keep, keep).det())
