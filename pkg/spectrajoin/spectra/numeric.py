"""
Numeric spectra, exact adjacency eigenvalue inputs and the regular transfer.
"""

import logging
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Tuple

from ..algebra import Poly, charpoly
from ..core.exceptions import PreconditionException
from ..graphs.graph import Graph, MatrixKind
from ..graphs.matrices import build_matrix, numeric_matrix
from .jacobi import jacobi_eigenvalues
from .spectrum import Spectrum, Value

logger = logging.getLogger(__name__)


def numeric_spectrum(
    graph: Graph,
    kind: MatrixKind,
    tolerance: float = 1e-12,
    max_sweeps: int = 100,
    multiplicity_tolerance: float = 1e-8,
) -> Spectrum:
    """Eigenvalues of the symmetric form of the chosen matrix via Jacobi."""
    kind = MatrixKind(kind)
    values = jacobi_eigenvalues(numeric_matrix(graph, kind), tolerance, max_sweeps)
    return Spectrum.from_values((float(v) for v in values), kind, multiplicity_tolerance)


@lru_cache(maxsize=4096)
def exact_charpoly(graph: Graph, kind: MatrixKind) -> Poly:
    """Cached det(xI - M) for the exact matrix of the given kind."""
    return charpoly(build_matrix(graph, MatrixKind(kind)))


def adjacency_eigenvalues(graph: Graph) -> List[Value]:
    """All adjacency eigenvalues, descending; rational ones are exact Fractions.

    Rational roots are split off the exact charpoly; the remaining values come
    from the Jacobi spectrum with the nearest matches of each rational root
    removed.
    """
    rational: Dict[Fraction, int] = exact_charpoly(graph, MatrixKind.A).rational_roots()
    floats = numeric_spectrum(graph, MatrixKind.A).values()
    for root, mult in rational.items():
        for _ in range(mult):
            nearest = min(range(len(floats)), key=lambda i: abs(floats[i] - float(root)))
            floats.pop(nearest)
    values: List[Value] = [root for root, mult in rational.items() for _ in range(mult)]
    values.extend(floats)
    return sorted(values, key=float, reverse=True)


def non_principal_eigenvalues(graph: Graph, degree: int) -> List[Value]:
    """Adjacency eigenvalues of an r-regular graph with one copy of r removed."""
    values = adjacency_eigenvalues(graph)
    values.remove(Fraction(degree))
    return values


def transfer_value(value: Value, degree: int, target: MatrixKind) -> Value:
    target = MatrixKind(target)
    if target is MatrixKind.L:
        return degree - value
    if target is MatrixKind.Q:
        return degree + value
    if target is MatrixKind.NL:
        if degree == 0:
            raise PreconditionException("Normalized transfer needs degree r >= 1")
        return 1 - value / Fraction(degree) if isinstance(value, Fraction) else 1.0 - value / degree
    raise PreconditionException(f"Cannot transfer an adjacency spectrum to {target.value}")


def regular_transfer(spectrum: Spectrum, degree: int, target: MatrixKind) -> Spectrum:
    """Map the adjacency spectrum of an r-regular graph to L, Q or NL.

    mu = r - lambda, nu = r + lambda, delta = 1 - lambda / r.

    Raises:
        PreconditionException: Input kind is not A, or r = 0 with an NL target.
    """
    if spectrum.kind is not MatrixKind.A:
        raise PreconditionException(f"Transfer needs an adjacency spectrum, got {spectrum.kind.value}")
    target = MatrixKind(target)
    entries: Tuple = tuple(
        (transfer_value(value, degree, target), mult) for value, mult in spectrum.entries
    )
    entries = tuple(sorted(entries, key=lambda e: float(e[0]), reverse=True))
    return Spectrum(target, entries)
