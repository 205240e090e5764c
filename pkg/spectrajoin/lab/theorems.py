"""
Verifiers for the join theorems.

Characteristic-polynomial theorems are checked as exact identities. Every
factor of the right-hand side is a rational determinant or coronal value at
an integer sample point; the pointwise products are interpolated into a
polynomial and compared coefficient by coefficient with the charpoly of the
assembled join. Closed-form spectrum theorems are checked against the Jacobi
spectrum of the assembled join.

Right-hand sides share one shape::

    det B(x) * det R(x) * det(y I - M(x)) * (1 - Gamma_B(x) * Gamma_M(x)(y))

where R eliminates the split block, B is the G2 block and M collects what is
left on the G1 block.
"""

import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Tuple

from ..algebra import ExactMatrix, Poly, coronal_at, interpolate
from ..config import settings
from ..core.dtos import OracleReportDTO, TheoremReportDTO
from ..core.exceptions import PreconditionException, SingularMatrixException
from ..core.result import Result
from ..core.validators import TheoremValidator
from ..graphs.graph import Graph, MatrixKind
from ..graphs.matrices import adjacency_matrix, build_matrix, degree_matrix
from ..graphs.spec_parser import parse_graph_spec
from ..joins.operations import JoinKind, join
from ..spectra.closed_forms import closed_form_spectrum
from ..spectra.numeric import exact_charpoly, numeric_spectrum

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class _Factors:
    """Exact pieces of one right-hand side at one sample point."""

    det_b: Fraction
    gamma_b: Fraction
    det_r: Fraction
    m: ExactMatrix
    y: Fraction


def _g2_block(g2: Graph, kind: MatrixKind, x: Fraction) -> Tuple[Fraction, Fraction]:
    """det(xI - X2) and Gamma_{X2}(x); (1, 0) when G2 is empty."""
    if g2.n == 0:
        return Fraction(1), Fraction(0)
    m2 = build_matrix(g2, kind)
    return (-m2).shift(x).det(), coronal_at(m2, x)


def _adjacency_factors(g1: Graph, g2: Graph, x: Fraction, split: ExactMatrix) -> _Factors:
    n1 = g1.n
    if x == 0:
        raise SingularMatrixException("R = xI is singular at x = 0")
    det_b, gamma_b = _g2_block(g2, MatrixKind.A, x)
    m = adjacency_matrix(g1) + (split @ split).scale(Fraction(1) / x)
    return _Factors(det_b, gamma_b, x ** n1, m, x)


def _nns_kirchhoff_factors(g1: Graph, g2: Graph, x: Fraction, kind: MatrixKind) -> _Factors:
    n1, n2 = g1.n, g2.n
    a1, d1 = adjacency_matrix(g1), degree_matrix(g1)
    a_bar = ExactMatrix.ones(n1, n1) - ExactMatrix.identity(n1) - a1
    r = d1.shift(x - n1 + 1)
    det_r = r.det()
    if det_r == 0:
        raise SingularMatrixException(f"(x - n1 + 1)I + D1 is singular at x = {x}")
    sign = -1 if kind is MatrixKind.L else 1
    m = a1.scale(sign) + a_bar @ r.inverse() @ a_bar
    det_b, gamma_b = _g2_block(g2, kind, x - n1)
    return _Factors(det_b, gamma_b, det_r, m, x - n1 - n2 + 1)


def _ns_kirchhoff_factors(g1: Graph, g2: Graph, x: Fraction, kind: MatrixKind) -> _Factors:
    n1, n2 = g1.n, g2.n
    a1, d1 = adjacency_matrix(g1), degree_matrix(g1)
    r = (-d1).shift(x)
    det_r = r.det()
    if det_r == 0:
        raise SingularMatrixException(f"xI - D1 is singular at x = {x}")
    sign = -1 if kind is MatrixKind.L else 1
    m = d1.scale(2) + a1.scale(sign) + a1 @ r.inverse() @ a1
    det_b, gamma_b = _g2_block(g2, kind, x - n1)
    return _Factors(det_b, gamma_b, det_r, m, x - n2)


def _factors_41a(g1: Graph, g2: Graph, x: Fraction) -> _Factors:
    n1 = g1.n
    a_bar = ExactMatrix.ones(n1, n1) - ExactMatrix.identity(n1) - adjacency_matrix(g1)
    return _adjacency_factors(g1, g2, x, a_bar)


def _factors_41b(g1: Graph, g2: Graph, x: Fraction) -> _Factors:
    return _adjacency_factors(g1, g2, x, adjacency_matrix(g1))


# theorem id -> (join, matrix kind, factor builder)
CHARPOLY_THEOREMS: Dict[str, Tuple[JoinKind, MatrixKind, Callable]] = {
    "4.1a": (JoinKind.NNS, MatrixKind.A, _factors_41a),
    "4.1b": (JoinKind.NS, MatrixKind.A, _factors_41b),
    "4.2a": (JoinKind.NNS, MatrixKind.L, lambda g1, g2, x: _nns_kirchhoff_factors(g1, g2, x, MatrixKind.L)),
    "4.2b": (JoinKind.NS, MatrixKind.L, lambda g1, g2, x: _ns_kirchhoff_factors(g1, g2, x, MatrixKind.L)),
    "4.3a": (JoinKind.NNS, MatrixKind.Q, lambda g1, g2, x: _nns_kirchhoff_factors(g1, g2, x, MatrixKind.Q)),
    "4.3b": (JoinKind.NS, MatrixKind.Q, lambda g1, g2, x: _ns_kirchhoff_factors(g1, g2, x, MatrixKind.Q)),
}

SPECTRUM_THEOREMS: Dict[str, Tuple[JoinKind, MatrixKind]] = {
    "5.1": (JoinKind.NS, MatrixKind.NL),
    "6.1": (JoinKind.NNS, MatrixKind.A),
    "6.2": (JoinKind.NNS, MatrixKind.L),
    "6.3": (JoinKind.NNS, MatrixKind.Q),
    "6.4": (JoinKind.NNS, MatrixKind.NL),
}


def evaluate_rhs(theorem: str, g1: Graph, g2: Graph, x: int) -> Result[Fraction]:
    """Right-hand side of a charpoly theorem at one integer point.

    Returns Err when x is a pole of some factor (a singular R, B or yI - M).
    """
    _, _, build = CHARPOLY_THEOREMS[theorem]
    x = Fraction(x)
    try:
        f = build(g1, g2, x)
        if f.det_b == 0:
            return Result.err(f"G2 block is singular at x = {x}")
        det_m = (-f.m).shift(f.y).det()
        if det_m == 0:
            return Result.err(f"yI - M is singular at x = {x}")
        gamma_m = coronal_at(f.m, f.y)
    except SingularMatrixException as e:
        return Result.err(str(e))
    return Result.ok(f.det_b * f.det_r * det_m * (1 - f.gamma_b * gamma_m))


def verify_charpoly_theorem(
    theorem: str, g1: Graph, g2: Graph, extra_points: int = 2
) -> TheoremReportDTO:
    """Check one charpoly theorem on (G1, G2) as an exact polynomial identity.

    Args:
        theorem: 4.1a, 4.1b, 4.2a, 4.2b, 4.3a or 4.3b.
        g1: Any graph with at least one vertex.
        g2: Any graph.
        extra_points: Valid sample points beyond the interpolation nodes that
            the interpolant must also reproduce.

    Raises:
        ValidationException: Unknown theorem id.
        PreconditionException: G1 is empty.
    """
    theorem = TheoremValidator.validate_theorem(theorem)
    if theorem not in CHARPOLY_THEOREMS:
        raise PreconditionException(f"{theorem} is not a charpoly theorem")
    if g1.n == 0:
        raise PreconditionException("G1 needs at least one vertex")

    join_kind, kind, _ = CHARPOLY_THEOREMS[theorem]
    lhs = exact_charpoly(join(join_kind, g1, g2), kind)

    total = 2 * g1.n + g2.n
    needed = total + 1 + extra_points
    x = 2 * total + settings.SAMPLE_OFFSET
    points: List[Tuple[int, Fraction]] = []
    skipped: List[int] = []
    while len(points) < needed:
        value = evaluate_rhs(theorem, g1, g2, x)
        if value.is_ok():
            points.append((x, value.unwrap()))
        else:
            logger.warning(f"{theorem}: skipping sample point x={x} ({value.reason})")
            skipped.append(x)
        x += 1

    rhs = interpolate(points[: total + 1])
    extras_ok = all(rhs(px) == py for px, py in points[total + 1:])
    equal = extras_ok and rhs == lhs
    if not equal:
        logger.error(f"{theorem} fails on {g1!r}, {g2!r}: lhs={lhs}, rhs={rhs}")
    else:
        logger.debug(f"{theorem} holds on {g1!r}, {g2!r}")

    return TheoremReportDTO(
        theorem=theorem,
        lhs=str(lhs),
        rhs=str(rhs),
        equal=equal,
        sample_points=[px for px, _ in points],
        skipped_points=skipped,
    )


def verify_closed_form(
    theorem: str,
    g1: Graph,
    g2: Graph,
    tolerance: float = 1e-8,
    jacobi_tolerance: float = 1e-12,
    max_sweeps: int = 100,
) -> OracleReportDTO:
    """Compare a closed-form join spectrum with the Jacobi spectrum of the join.

    Raises:
        PreconditionException: Non-regular input, or a degree the closed form
            excludes.
    """
    theorem = TheoremValidator.validate_theorem(theorem)
    if theorem not in SPECTRUM_THEOREMS:
        raise PreconditionException(f"{theorem} is not a closed-form spectrum theorem")
    join_kind, kind = SPECTRUM_THEOREMS[theorem]

    closed = closed_form_spectrum(join_kind, kind, g1, g2)
    numeric = numeric_spectrum(join(join_kind, g1, g2), kind, jacobi_tolerance, max_sweeps)
    passed = closed.matches(numeric, tolerance)
    deviation = closed.max_deviation(numeric)
    if passed:
        logger.debug(f"{theorem} closed form matches (max deviation {deviation:.2e})")
    else:
        logger.error(f"{theorem} closed form deviates by {deviation} on {g1!r}, {g2!r}")

    return OracleReportDTO(
        theorem=theorem,
        closed_form=closed.values(),
        numeric=numeric.values(),
        max_deviation=deviation,
        passed=passed,
    )


# ----------------------------------------------------------------------
# Random inputs for seeded trials
# ----------------------------------------------------------------------

REGULAR_CORPUS = ("K1", "K2", "K3", "K4", "C4", "C5", "C6", "K3,3", "2K2", "2K3", "Petersen")


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    """G(n, p) with edges drawn in lexicographic order from ``rng``."""
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def random_pair(rng: random.Random, max_n: int) -> Tuple[Graph, Graph]:
    n1 = rng.randint(1, max_n)
    n2 = rng.randint(1, max_n)
    return random_graph(rng, n1), random_graph(rng, n2)


def regular_corpus(positive_degree: bool = False) -> List[Graph]:
    """The regular corpus, optionally without its edgeless members."""
    corpus = [parse_graph_spec(s) for s in REGULAR_CORPUS]
    if not positive_degree:
        return corpus
    return [g for g in corpus if (degree := g.is_regular()) is not None and degree > 0]


def random_regular_pair(rng: random.Random, positive_g1_degree: bool = True) -> Tuple[Graph, Graph]:
    """Two graphs from the regular corpus; G1 has an edge when requested."""
    return rng.choice(regular_corpus(positive_g1_degree)), rng.choice(regular_corpus())


def needs_positive_g1_degree(theorem: str) -> bool:
    _, kind = SPECTRUM_THEOREMS[theorem]
    return kind is MatrixKind.NL
