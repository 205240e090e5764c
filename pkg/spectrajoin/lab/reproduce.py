"""
Recompute published join spectra and compare them entry by entry.

The table lives in ``data/published_spectra.json``. F is the quadrangle plus an
isolated vertex and H the star K1,4; both have adjacency charpoly
x^5 - 4x^3, which is checked before anything is compared.
"""

import json
import logging
from pathlib import Path
from typing import Callable, Dict, List, Optional, Tuple

from ..algebra import Poly
from ..config import settings
from ..core.dtos import DeviationDTO, NicsReportDTO, ReproduceEntryDTO
from ..core.exceptions import ValidationException, VerificationException
from ..graphs.graph import Graph, MatrixKind
from ..graphs.spec_parser import parse_graph_spec
from ..joins.operations import JoinKind, join
from ..spectra.numeric import exact_charpoly, numeric_spectrum
from .cospectral import are_cospectral_exact
from .factories import nics_pair

logger = logging.getLogger(__name__)

DATA_DIR = Path(__file__).resolve().parent.parent / "data"

F_SPEC = "C4+K1"
H_SPEC = "K1,4"
SHARED_CHARPOLY = Poly([0, 0, 0, -4, 0, 1])

# figure id -> template building it from C4, C4 and a regular cospectral pair
FIGURES = {"fig8": "cor5.2", "fig9": "cor6.5"}

PairProvider = Callable[[], Tuple[Graph, Graph]]


def load_expected(path: Optional[Path] = None) -> Dict[str, dict]:
    """Published spectra keyed by id, validated by ExpectedTableSchema."""
    from ..schemas import ExpectedTableSchema

    path = path or DATA_DIR / settings.PUBLISHED_SPECTRA_FILE
    with open(path, "r", encoding="utf-8") as handle:
        table = ExpectedTableSchema().load(json.load(handle))
    return {row["id"]: row for row in table["spectra"]}


def check_shared_charpoly() -> None:
    """F and H must both have adjacency charpoly x^5 - 4x^3.

    Raises:
        VerificationException: If either does not.
    """
    for label, spec in (("F", F_SPEC), ("H", H_SPEC)):
        poly = exact_charpoly(parse_graph_spec(spec), MatrixKind.A)
        if poly != SHARED_CHARPOLY:
            raise VerificationException(f"{label} = {spec} has charpoly {poly}, expected {SHARED_CHARPOLY}")


def non_cospectral_joins() -> Dict[str, bool]:
    """Whether each join of K2 with F and with H stays A-cospectral.

    Every value is expected to be False.
    """
    k2, f, h = (parse_graph_spec(s) for s in ("K2", F_SPEC, H_SPEC))
    out = {}
    for kind in (JoinKind.NS, JoinKind.NNS):
        out[f"k2-{kind.value}"] = are_cospectral_exact(join(kind, k2, f), join(kind, k2, h), MatrixKind.A)
        out[f"{kind.value}-k2"] = are_cospectral_exact(join(kind, f, k2), join(kind, h, k2), MatrixKind.A)
    return out


def compare_spectrum(row: dict, tolerance: float = 1e-3) -> ReproduceEntryDTO:
    """Recompute one table row and list every entry off by more than ``tolerance``."""
    kind = MatrixKind.parse(row["matrix"])
    g1, g2 = parse_graph_spec(row["g1"]), parse_graph_spec(row["g2"])
    joined = join(JoinKind.parse(row["join"]), g1, g2)
    computed = numeric_spectrum(joined, kind).values()
    expected = sorted(row["expected"])

    deviations: List[DeviationDTO] = []
    for index in range(max(len(expected), len(computed))):
        want = expected[index] if index < len(expected) else float("nan")
        got = computed[index] if index < len(computed) else None
        if got is None or not abs(want - got) <= tolerance:
            deviations.append(DeviationDTO(index=index, expected=want, computed=got))

    entry = ReproduceEntryDTO(
        id=row["id"],
        construction=f"{row['join']}({row['g1']}, {row['g2']})",
        matrix=kind.value,
        expected=expected,
        computed=[round(v, settings.DISPLAY_DECIMALS) + 0.0 for v in computed],
        deviations=deviations,
        passed=not deviations,
    )
    if entry.passed:
        logger.info(f"✓ {entry.id} reproduced")
    else:
        logger.error(f"✗ {entry.id}: {len(deviations)} entries off by more than {tolerance}")
    return entry


def reproduce_figure(figure: str, pair_provider: PairProvider) -> NicsReportDTO:
    """Rebuild a figure's NICS pair from C4, C4 and a regular cospectral pair."""
    if figure not in FIGURES:
        raise ValidationException(f"Unknown figure: {figure}. Allowed: {', '.join(FIGURES)}")
    c4 = parse_graph_spec("C4")
    g2, h2 = pair_provider()
    return nics_pair(FIGURES[figure], [c4, c4, g2, h2])


def example_ids() -> List[str]:
    return list(load_expected()) + list(FIGURES)
