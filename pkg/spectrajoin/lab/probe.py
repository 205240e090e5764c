"""
Experimental probe: do NS and NNS joins with a fixed graph carry
A-cospectrality of a regular pair over to the normalized Laplacian?

Only the Kirchhoff kinds are guaranteed for a non-regular fixed graph, so a
false NL verdict is a reported counterexample rather than an error.
"""

import logging
from typing import Tuple

from ..core.dtos import ProbeReportDTO
from ..core.exceptions import ValidationException
from ..graphs.codecs import to_graph6
from ..graphs.graph import Graph
from ..joins.operations import JoinKind, join
from .cospectral import cospectral_verdicts
from .factories import require_regular_cospectral

logger = logging.getLogger(__name__)

SIDES = ("right-fixed-G", "left-fixed-H")


def conjecture_probe(side: str, g: Graph, pair: Tuple[Graph, Graph]) -> ProbeReportDTO:
    """Exact cospectrality verdicts for joins of a fixed graph with a regular pair.

    Args:
        side: ``right-fixed-G`` joins G on the left of each pair member
            (G . F vs G . H); ``left-fixed-H`` puts the pair on the left
            (F . G vs H . G).
        g: Any graph.
        pair: Regular, A-cospectral, non-isomorphic graphs (F, H).
    """
    if side not in SIDES:
        raise ValidationException(f"Invalid probe side: {side}. Allowed: {', '.join(SIDES)}")
    f, h = pair
    require_regular_cospectral(f, h, "Probe pair", non_isomorphic=True)

    verdicts = {}
    for kind in (JoinKind.NS, JoinKind.NNS):
        if side == "right-fixed-G":
            left, right = join(kind, g, f), join(kind, g, h)
        else:
            left, right = join(kind, f, g), join(kind, h, g)
        verdicts[kind] = cospectral_verdicts(left, right)

    report = ProbeReportDTO(
        side=side,
        fixed=to_graph6(g),
        pair=[to_graph6(f), to_graph6(h)],
        ns=verdicts[JoinKind.NS],
        nns=verdicts[JoinKind.NNS],
    )
    for label, found in (("NS", report.ns), ("NNS", report.nns)):
        if not found["NL"]:
            logger.warning(f"Probe counterexample ({side}, {label}): joins are not NL-cospectral")
    return report
