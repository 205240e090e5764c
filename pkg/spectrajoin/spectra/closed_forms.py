"""
Closed-form spectra of NS and NNS joins of two regular graphs.

Each spectrum has three parts:
  - values inherited from the non-principal eigenvectors of G2;
  - two values per non-principal eigenvalue of G1, from a 2x2 block;
  - the three eigenvalues of the quotient matrix on the block indicator
    vectors (u, u', v), i.e. the roots of a cubic.

Writing k = n1 - r1 - 1, p = n1 + n2 - 1 (the degree of u_i in the NNS join)
and q = n1 + r2 (the degree of v_j in either join).
"""

import logging
import math
from fractions import Fraction
from typing import List, Tuple

from ..algebra import ExactMatrix, charpoly
from ..core.exceptions import PreconditionException
from ..graphs.graph import Graph, MatrixKind
from ..joins.operations import JoinKind
from .numeric import exact_charpoly, non_principal_eigenvalues, transfer_value
from .roots import solve_cubic_real, solve_quadratic_real
from .spectrum import SplitEigSet, Spectrum, Value

logger = logging.getLogger(__name__)


def _regular(graph: Graph, label: str) -> Tuple[int, int, List[Value]]:
    r = graph.is_regular()
    if r is None:
        raise PreconditionException(f"{label} must be regular for a closed-form spectrum")
    return graph.n, r, non_principal_eigenvalues(graph, r)


def _cubic_roots(quotient: ExactMatrix) -> List[Value]:
    c0, c1, c2, c3 = (charpoly(quotient).coeff(i) for i in range(4))
    return solve_cubic_real(c3, c2, c1, c0)


def _build(values: List[Value], kind: MatrixKind, expected: int) -> Spectrum:
    if len(values) != expected:
        raise PreconditionException(f"Assembled {len(values)} eigenvalues, expected {expected}")
    return Spectrum.from_values(values, kind)


# ----------------------------------------------------------------------
# NS join, normalized Laplacian
# ----------------------------------------------------------------------


def ns_quotient_normalized(n1: int, r1: int, n2: int, r2: int) -> ExactMatrix:
    d_u = 2 * r1 + n2
    q = n1 + r2
    return ExactMatrix([
        [1 - Fraction(r1, d_u), -Fraction(r1, d_u), -Fraction(n2, d_u)],
        [-1, 1, 0],
        [-Fraction(n1, q), 0, 1 - Fraction(r2, q)],
    ])


def ns_normalized_spectrum(g1: Graph, g2: Graph) -> Spectrum:
    """Normalized Laplacian spectrum of the NS join of r1- and r2-regular graphs.

    Raises:
        PreconditionException: Non-regular input, r1 = 0 or an empty side.
    """
    n1, r1, lambdas1 = _regular(g1, "G1")
    n2, r2, lambdas2 = _regular(g2, "G2")
    if r1 == 0:
        raise PreconditionException("G1 must have degree r1 >= 1")

    q = n1 + r2
    # 1 + r2 (delta - 1) / q with delta = 1 - lambda / r2, written in lambda so r2 = 0 is fine
    values: List[Value] = [1 - lam / q for lam in lambdas2]

    root = math.sqrt(9 * r1 * r1 + 4 * r1 * n2)
    denom = 2 * (2 * r1 + n2)
    for lam in lambdas1:
        delta_minus_one = transfer_value(lam, r1, MatrixKind.NL) - 1
        if delta_minus_one == 0:
            values.extend([Fraction(1), Fraction(1)])
            continue
        dm1 = float(delta_minus_one)
        values.append(1.0 + dm1 * (root + r1) / denom)
        values.append(1.0 - dm1 * (root - r1) / denom)

    values.extend(_cubic_roots(ns_quotient_normalized(n1, r1, n2, r2)))
    return _build(values, MatrixKind.NL, 2 * n1 + n2)


# ----------------------------------------------------------------------
# NNS join
# ----------------------------------------------------------------------


def nns_quotient(kind: MatrixKind, n1: int, r1: int, n2: int, r2: int) -> ExactMatrix:
    """Quotient matrix of the chosen kind on the (u, u', v) block indicators."""
    k = n1 - r1 - 1
    p = n1 + n2 - 1
    q = n1 + r2
    kind = MatrixKind(kind)
    if kind is MatrixKind.A:
        return ExactMatrix([[r1, k, n2], [k, 0, 0], [n1, 0, r2]])
    if kind is MatrixKind.L:
        return ExactMatrix([[p - r1, -k, -n2], [-k, k, 0], [-n1, 0, n1]])
    if kind is MatrixKind.Q:
        return ExactMatrix([[p + r1, k, n2], [k, k, 0], [n1, 0, n1 + 2 * r2]])
    split_row = [-1, 1, 0] if k > 0 else [0, 0, 0]
    return ExactMatrix([
        [1 - Fraction(r1, p), -Fraction(k, p), -Fraction(n2, p)],
        split_row,
        [-Fraction(n1, q), 0, 1 - Fraction(r2, q)],
    ])


def nns_adjacency_spectrum(g1: Graph, g2: Graph) -> Spectrum:
    """Adjacency spectrum of the NNS join of two regular graphs."""
    n1, r1, lambdas1 = _regular(g1, "G1")
    n2, r2, lambdas2 = _regular(g2, "G2")

    values: List[Value] = list(lambdas2)
    for lam in lambdas1:
        values.extend(solve_quadratic_real(1, -lam, -(lam + 1) ** 2))
    values.extend(_cubic_roots(nns_quotient(MatrixKind.A, n1, r1, n2, r2)))
    return _build(values, MatrixKind.A, 2 * n1 + n2)


def nns_laplacian_spectrum(g1: Graph, g2: Graph) -> Spectrum:
    """Laplacian spectrum of the NNS join of two regular graphs."""
    n1, r1, lambdas1 = _regular(g1, "G1")
    n2, r2, lambdas2 = _regular(g2, "G2")
    k, p = n1 - r1 - 1, n1 + n2 - 1

    values: List[Value] = [n1 + transfer_value(lam, r2, MatrixKind.L) for lam in lambdas2]
    for lam in lambdas1:
        mu = transfer_value(lam, r1, MatrixKind.L)
        # block [[p - r1 + mu, 1 + r1 - mu], [1 + r1 - mu, k]]
        a = p - r1 + mu
        values.extend(solve_quadratic_real(1, -(a + k), a * k - (1 + r1 - mu) ** 2))
    values.extend(_cubic_roots(nns_quotient(MatrixKind.L, n1, r1, n2, r2)))
    return _build(values, MatrixKind.L, 2 * n1 + n2)


def nns_signless_spectrum(g1: Graph, g2: Graph) -> Spectrum:
    """Signless Laplacian spectrum of the NNS join of two regular graphs."""
    n1, r1, lambdas1 = _regular(g1, "G1")
    n2, r2, lambdas2 = _regular(g2, "G2")
    k, p = n1 - r1 - 1, n1 + n2 - 1

    values: List[Value] = [n1 + transfer_value(lam, r2, MatrixKind.Q) for lam in lambdas2]
    for lam in lambdas1:
        nu = transfer_value(lam, r1, MatrixKind.Q)
        # block [[p - r1 + nu, r1 - nu - 1], [r1 - nu - 1, k]]
        a = p - r1 + nu
        values.extend(solve_quadratic_real(1, -(a + k), a * k - (nu - r1 + 1) ** 2))
    values.extend(_cubic_roots(nns_quotient(MatrixKind.Q, n1, r1, n2, r2)))
    return _build(values, MatrixKind.Q, 2 * n1 + n2)


def split_eig_set(g1: Graph) -> SplitEigSet:
    """Indices 2..n1 whose adjacency eigenvalue is exactly -1.

    The count is the multiplicity of the factor x + 1 in the exact charpoly;
    the principal eigenvalue r1 >= 1 never contributes.
    """
    count = exact_charpoly(g1, MatrixKind.A).multiplicity(-1)
    return SplitEigSet(frozenset(range(2, 2 + count)), g1.n)


def nns_normalized_spectrum(g1: Graph, g2: Graph) -> Spectrum:
    """Normalized Laplacian spectrum of the NNS join of two regular graphs.

    Eigenvalues -1 of G1 give the pair 1 + 1/p and 1 (0 instead of 1 when G1
    is complete and the split vertices are isolated); every other
    non-principal eigenvalue gives the eigenvalues of
    [[1 - lambda/p, (1 + lambda)/sqrt(pk)], [(1 + lambda)/sqrt(pk), 1]].

    Raises:
        PreconditionException: Non-regular input or r1 = 0.
    """
    n1, r1, lambdas1 = _regular(g1, "G1")
    n2, r2, lambdas2 = _regular(g2, "G2")
    if r1 == 0:
        raise PreconditionException("G1 must have degree r1 >= 1")
    k, p, q = n1 - r1 - 1, n1 + n2 - 1, n1 + r2

    split = split_eig_set(g1)
    logger.info(f"NNS normalized spectrum: case ({split.case}), n(S)={split.size}")

    values: List[Value] = [1 - lam / q for lam in lambdas2]
    for lam in lambdas1:
        if lam == -1:
            values.extend([1 + Fraction(1, p), Fraction(1) if k > 0 else Fraction(0)])
            continue
        top = 1 - lam / p
        det = top - (1 + lam) ** 2 / (p * k)
        values.extend(solve_quadratic_real(1, -(top + 1), det))
    values.extend(_cubic_roots(nns_quotient(MatrixKind.NL, n1, r1, n2, r2)))
    return _build(values, MatrixKind.NL, 2 * n1 + n2)


def closed_form_spectrum(join_kind: JoinKind, matrix_kind: MatrixKind, g1: Graph, g2: Graph) -> Spectrum:
    """Dispatch to the closed form for (join, matrix).

    Raises:
        PreconditionException: No closed form exists for the combination.
    """
    matrix_kind = MatrixKind(matrix_kind)
    if not isinstance(join_kind, JoinKind):
        join_kind = JoinKind.parse(join_kind)
    if join_kind is JoinKind.NS and matrix_kind is MatrixKind.NL:
        return ns_normalized_spectrum(g1, g2)
    if join_kind is JoinKind.NNS:
        return {
            MatrixKind.A: nns_adjacency_spectrum,
            MatrixKind.L: nns_laplacian_spectrum,
            MatrixKind.Q: nns_signless_spectrum,
            MatrixKind.NL: nns_normalized_spectrum,
        }[matrix_kind](g1, g2)
    raise PreconditionException(
        f"No closed-form {matrix_kind.value} spectrum for the {join_kind.value} join; use --method direct"
    )
