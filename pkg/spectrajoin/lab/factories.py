"""
Factories for non-isomorphic cospectral (NICS) join pairs.

Templates and their inputs:

    cor4.4a  (G, F, H)          NS join  G . F  vs  G . H       {A, L, Q}
    cor4.4b  (G, F, H)          NNS join G . F  vs  G . H       {A, L, Q}
    cor4.5a  (G, F, H)          NS join  F . G  vs  H . G       {A, L, Q}
    cor4.5b  (G, F, H)          NNS join F . G  vs  H . G       {A, L, Q}
    cor5.2   (G1, H1, G2, H2)   NS join  G1 . G2 vs H1 . H2     {A, L, Q, NL}
    cor6.5   (G1, H1, G2, H2)   NNS join G1 . G2 vs H1 . H2     {A, L, Q, NL}

F and H (and G2, H2) must be regular of one degree, A-cospectral and
non-isomorphic; G1 and H1 regular of one degree and A-cospectral.
"""

import logging
from typing import Dict, Sequence, Tuple

from ..core.dtos import NicsReportDTO
from ..core.exceptions import PreconditionException, ValidationException, VerificationException
from ..core.validators import TemplateValidator
from ..graphs.graph import Graph, MatrixKind
from ..graphs.isomorphism import are_isomorphic
from ..joins.operations import JoinKind, join
from .cospectral import are_cospectral_exact, snics_verdict

logger = logging.getLogger(__name__)

KIRCHHOFF_KINDS = (MatrixKind.A, MatrixKind.L, MatrixKind.Q)
ALL_KINDS = KIRCHHOFF_KINDS + (MatrixKind.NL,)

# template -> (join, G on the left?, kinds certified, input count)
TEMPLATES: Dict[str, Tuple[JoinKind, bool, Tuple[MatrixKind, ...], int]] = {
    "cor4.4a": (JoinKind.NS, True, KIRCHHOFF_KINDS, 3),
    "cor4.4b": (JoinKind.NNS, True, KIRCHHOFF_KINDS, 3),
    "cor4.5a": (JoinKind.NS, False, KIRCHHOFF_KINDS, 3),
    "cor4.5b": (JoinKind.NNS, False, KIRCHHOFF_KINDS, 3),
    "cor5.2": (JoinKind.NS, True, ALL_KINDS, 4),
    "cor6.5": (JoinKind.NNS, True, ALL_KINDS, 4),
}


def require_regular_cospectral(f: Graph, h: Graph, label: str, non_isomorphic: bool) -> int:
    """Check that F and H are regular of one degree and A-cospectral.

    Returns:
        The common degree.

    Raises:
        PreconditionException: On the first violated condition.
    """
    rf, rh = f.is_regular(), h.is_regular()
    if rf is None or rh is None:
        raise PreconditionException(f"{label} must both be regular")
    if rf != rh or f.n != h.n:
        raise PreconditionException(
            f"{label} must share order and degree: (n={f.n}, r={rf}) vs (n={h.n}, r={rh})"
        )
    if not are_cospectral_exact(f, h, MatrixKind.A):
        raise PreconditionException(f"{label} are not A-cospectral")
    if non_isomorphic and are_isomorphic(f, h)[0]:
        raise PreconditionException(f"{label} are isomorphic")
    return rf


def build_pair(template: str, graphs: Sequence[Graph]) -> Tuple[Graph, Graph]:
    """Check the template's preconditions and assemble its two joins."""
    template = TemplateValidator.validate_template(template)
    join_kind, g_left, _, arity = TEMPLATES[template]
    if len(graphs) != arity:
        raise ValidationException(f"{template} takes {arity} graphs, got {len(graphs)}")

    if arity == 3:
        g, f, h = graphs
        require_regular_cospectral(f, h, "F and H", non_isomorphic=True)
        if g_left:
            return join(join_kind, g, f), join(join_kind, g, h)
        return join(join_kind, f, g), join(join_kind, h, g)

    g1, h1, g2, h2 = graphs
    r1 = require_regular_cospectral(g1, h1, "G1 and H1", non_isomorphic=False)
    if r1 == 0:
        raise PreconditionException("G1 and H1 need degree r1 >= 1")
    require_regular_cospectral(g2, h2, "G2 and H2", non_isomorphic=True)
    return join(join_kind, g1, g2), join(join_kind, h1, h2)


def nics_pair(template: str, graphs: Sequence[Graph]) -> NicsReportDTO:
    """Build a template's pair and certify it exactly.

    Raises:
        ValidationException: Unknown template or wrong number of graphs.
        PreconditionException: Inputs violate the template's hypotheses.
        VerificationException: The constructed pair is not NICS for the
            template's matrix kinds.
    """
    left, right = build_pair(template, graphs)
    kinds = TEMPLATES[template.strip().lower()][2]
    report = snics_verdict(left, right, kinds, template=template.strip().lower())
    if not report.is_nics:
        logger.error(f"✗ {template}: not NICS: {report.cospectral}, isomorphic={report.isomorphic}")
        raise VerificationException(
            f"{template} pair failed certification: cospectral={report.cospectral}, "
            f"isomorphic={report.isomorphic}"
        )
    logger.info(f"✓ {template}: {{{','.join(k.value for k in kinds)}}}NICS certified")
    return report
