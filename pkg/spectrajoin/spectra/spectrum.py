"""
Spectrum multisets and their sanity invariants.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import FrozenSet, Iterable, List, Optional, Tuple, Union

from ..graphs.graph import Graph, MatrixKind
from ..graphs.operations import component_count, is_bipartite

Value = Union[Fraction, float]


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues with multiplicities, sorted descending by value.

    Values are Fractions when they are known exactly and floats otherwise.
    """

    kind: MatrixKind
    entries: Tuple[Tuple[Value, int], ...]

    @classmethod
    def from_values(
        cls, values: Iterable[Value], kind: MatrixKind, tolerance: float = 1e-8
    ) -> "Spectrum":
        """Merge values closer than ``tolerance`` into one entry.

        Inside a cluster an exact value wins over floats; an all-float cluster
        is represented by its mean.
        """
        ordered = sorted(values, key=float, reverse=True)
        clusters: List[List[Value]] = []
        for v in ordered:
            if clusters and abs(float(clusters[-1][-1]) - float(v)) <= tolerance:
                clusters[-1].append(v)
            else:
                clusters.append([v])
        entries = []
        for cluster in clusters:
            exact = [v for v in cluster if isinstance(v, Fraction)]
            if exact:
                value: Value = exact[0]
            else:
                value = sum(float(v) for v in cluster) / len(cluster)
            entries.append((value, len(cluster)))
        return cls(MatrixKind(kind), tuple(entries))

    @property
    def size(self) -> int:
        return sum(mult for _, mult in self.entries)

    def values(self) -> List[float]:
        """All eigenvalues as floats, ascending, multiplicities expanded."""
        out = []
        for value, mult in self.entries:
            out.extend([float(value)] * mult)
        return sorted(out)

    def exact_values(self) -> List[Value]:
        out: List[Value] = []
        for value, mult in self.entries:
            out.extend([value] * mult)
        return sorted(out, key=float)

    def multiplicity(self, value: Value, tolerance: float = 1e-8) -> int:
        return sum(m for v, m in self.entries if abs(float(v) - float(value)) <= tolerance)

    def trace(self) -> float:
        return sum(float(v) * m for v, m in self.entries)

    def max_deviation(self, other: "Spectrum") -> float:
        """Largest pointwise gap of the sorted expansions (inf on a size mismatch)."""
        mine, theirs = self.values(), other.values()
        if len(mine) != len(theirs):
            return float("inf")
        return max((abs(a - b) for a, b in zip(mine, theirs)), default=0.0)

    def matches(self, other: "Spectrum", tolerance: float = 1e-8) -> bool:
        """Multiset equality, each gap allowed ``tolerance * (1 + |value|)``."""
        mine, theirs = self.values(), other.values()
        if len(mine) != len(theirs):
            return False
        return all(abs(a - b) <= tolerance * (1.0 + abs(a)) for a, b in zip(mine, theirs))

    def invariant_violations(
        self, graph: Optional[Graph] = None, tolerance: float = 1e-8
    ) -> List[str]:
        """Describe every kind invariant this spectrum breaks; empty when sound."""
        problems = []
        values = self.values()
        if graph is not None and self.size != graph.n:
            problems.append(f"total multiplicity {self.size} != {graph.n} vertices")
        if not values:
            return problems
        scale = tolerance * (1.0 + max(abs(v) for v in values)) * max(1, len(values))

        if self.kind is MatrixKind.A and abs(sum(values)) > scale:
            problems.append(f"adjacency trace {sum(values)} != 0")
        if graph is not None and self.kind in (MatrixKind.L, MatrixKind.Q):
            if abs(sum(values) - 2 * graph.edge_count) > scale:
                problems.append(f"trace {sum(values)} != 2|E| = {2 * graph.edge_count}")
        if self.kind in (MatrixKind.L, MatrixKind.NL) and abs(values[0]) > tolerance * 10:
            problems.append(f"smallest eigenvalue {values[0]} != 0")
        if self.kind is MatrixKind.NL:
            if values[0] < -tolerance * 10 or values[-1] > 2 + tolerance * 10:
                problems.append(f"normalized eigenvalues outside [0, 2]: {values[0]}..{values[-1]}")
            if graph is not None and graph.edge_count > 0 and component_count(graph) == 1:
                top_is_two = abs(values[-1] - 2) <= tolerance * 10
                if top_is_two != is_bipartite(graph):
                    problems.append("largest normalized eigenvalue is 2 iff bipartite fails")
        return problems


@dataclass(frozen=True)
class SplitEigSet:
    """Indices i >= 2 with lambda_i(G1) = -1, i.e. delta_i(G1) = 1 + 1/r1."""

    indices: FrozenSet[int]
    n1: int

    @property
    def size(self) -> int:
        return len(self.indices)

    @property
    def case(self) -> str:
        """``a`` when empty, ``b`` when it is all of 2..n1, ``c`` otherwise."""
        if not self.indices:
            return "a"
        if self.size == self.n1 - 1:
            return "b"
        return "c"
