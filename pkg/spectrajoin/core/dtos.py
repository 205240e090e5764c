"""
Data Transfer Objects for reports produced by the lab and printed by the CLI.

Values are kept JSON-ready: polynomials and exact numbers travel as strings,
numeric eigenvalues as floats.
"""

from dataclasses import asdict, dataclass, field
from typing import Any, Dict, List, Optional


@dataclass
class TheoremReportDTO:
    """Outcome of checking one characteristic-polynomial theorem."""

    theorem: str
    lhs: str  # direct charpoly of the join
    rhs: str  # theorem right-hand side, interpolated
    equal: bool
    sample_points: List[int] = field(default_factory=list)
    skipped_points: List[int] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


@dataclass
class OracleReportDTO:
    """A closed-form spectrum compared against the numeric oracle."""

    theorem: str
    closed_form: List[float]
    numeric: List[float]
    max_deviation: float
    passed: bool

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


@dataclass
class NicsReportDTO:
    """Cospectrality verdict for a pair of graphs.

    ``charpolys`` maps each kind to the two exact characteristic polynomials
    the verdict was read from, so every claim can be re-derived.
    """

    template: str
    left: str  # graph6 of the first graph
    right: str
    cospectral: Dict[str, bool]
    isomorphic: bool
    regular: List[bool] = field(default_factory=list)
    charpolys: Dict[str, List[str]] = field(default_factory=dict)

    @property
    def is_nics(self) -> bool:
        """True when cospectral for every kind checked and non-isomorphic."""
        return all(self.cospectral.values()) and not self.isomorphic

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        data["nics"] = self.is_nics
        return data


@dataclass
class ProbeReportDTO:
    """Normalized-Laplacian conjecture probe for one fixed graph.

    A false NL verdict is a reported counterexample, not an error.
    """

    side: str
    fixed: str
    pair: List[str]
    ns: Dict[str, bool]
    nns: Dict[str, bool]
    experimental: bool = True

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


@dataclass
class DeviationDTO:
    """One expected eigenvalue that the computed spectrum does not reproduce."""

    index: int
    expected: float
    computed: Optional[float]

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


@dataclass
class ReproduceEntryDTO:
    """Comparison of a published spectrum with a recomputed one."""

    id: str
    construction: str
    matrix: str
    expected: List[float]
    computed: List[float]
    deviations: List[DeviationDTO] = field(default_factory=list)
    passed: bool = True

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)
