"""
Cospectrality predicates, theorem verifiers, NICS factories, the regular
graph search and the normalized-Laplacian probe.
"""

from .cospectral import are_cospectral_exact, cospectral_verdicts, regular_equivalence_check, snics_verdict
from .factories import TEMPLATES, build_pair, nics_pair, require_regular_cospectral
from .probe import SIDES, conjecture_probe
from .search import SearchResult, find_regular_cospectral_pairs, regular_graph_classes, seed_regular_graph
from .theorems import (
    CHARPOLY_THEOREMS,
    REGULAR_CORPUS,
    SPECTRUM_THEOREMS,
    evaluate_rhs,
    verify_charpoly_theorem,
    verify_closed_form,
)

__all__ = [
    "are_cospectral_exact",
    "cospectral_verdicts",
    "regular_equivalence_check",
    "snics_verdict",
    "TEMPLATES",
    "build_pair",
    "nics_pair",
    "require_regular_cospectral",
    "SIDES",
    "conjecture_probe",
    "SearchResult",
    "find_regular_cospectral_pairs",
    "regular_graph_classes",
    "seed_regular_graph",
    "CHARPOLY_THEOREMS",
    "REGULAR_CORPUS",
    "SPECTRUM_THEOREMS",
    "evaluate_rhs",
    "verify_charpoly_theorem",
    "verify_closed_form",
]
