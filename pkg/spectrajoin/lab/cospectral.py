"""
Exact cospectrality predicates and NICS verdicts.
"""

import logging
from typing import Dict, Iterable, Sequence

from ..core.dtos import NicsReportDTO
from ..core.exceptions import PreconditionException, VerificationException
from ..graphs.codecs import to_graph6
from ..graphs.graph import Graph, MatrixKind
from ..graphs.isomorphism import are_isomorphic
from ..spectra.numeric import exact_charpoly

logger = logging.getLogger(__name__)

ALL_KINDS = (MatrixKind.A, MatrixKind.L, MatrixKind.Q, MatrixKind.NL)


def are_cospectral_exact(g: Graph, h: Graph, kind: MatrixKind) -> bool:
    """True iff the exact characteristic polynomials of the chosen matrix agree.

    NL compares I - D^{-1}A, which is similar to the symmetric normalized
    Laplacian and so has the same charpoly.
    """
    kind = MatrixKind(kind)
    if g.n != h.n:
        return False
    same = exact_charpoly(g, kind) == exact_charpoly(h, kind)
    if same and kind is MatrixKind.A and g.edge_count != h.edge_count:
        raise VerificationException(
            f"A-cospectral graphs with different edge counts ({g.edge_count} vs {h.edge_count})"
        )
    return same


def cospectral_verdicts(g: Graph, h: Graph, kinds: Iterable[MatrixKind] = ALL_KINDS) -> Dict[str, bool]:
    return {MatrixKind(k).value: are_cospectral_exact(g, h, k) for k in kinds}


def snics_verdict(
    g: Graph, h: Graph, kinds: Sequence[MatrixKind] = ALL_KINDS, template: str = "pair"
) -> NicsReportDTO:
    """Full report: per-kind exact verdicts with their charpolys, and isomorphism."""
    kinds = [MatrixKind(k) for k in kinds]
    charpolys = {}
    for k in kinds:
        if g.n == h.n:
            charpolys[k.value] = [str(exact_charpoly(g, k)), str(exact_charpoly(h, k))]
    isomorphic, _ = are_isomorphic(g, h)
    report = NicsReportDTO(
        template=template,
        left=to_graph6(g),
        right=to_graph6(h),
        cospectral=cospectral_verdicts(g, h, kinds),
        isomorphic=isomorphic,
        regular=[g.is_regular() is not None, h.is_regular() is not None],
        charpolys=charpolys,
    )
    logger.info(f"{template}: cospectral={report.cospectral}, isomorphic={isomorphic}")
    return report


def regular_equivalence_check(g: Graph, h: Graph) -> bool:
    """For regular graphs of one order and degree, all four verdicts agree.

    Raises:
        PreconditionException: If either graph is not regular or the orders
            or degrees differ.
    """
    rg, rh = g.is_regular(), h.is_regular()
    if rg is None or rh is None:
        raise PreconditionException("Both graphs must be regular")
    if g.n != h.n or rg != rh:
        raise PreconditionException(
            f"Graphs must share order and degree: (n={g.n}, r={rg}) vs (n={h.n}, r={rh})"
        )
    verdicts = cospectral_verdicts(g, h)
    return len(set(verdicts.values())) == 1
