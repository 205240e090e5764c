"""
Unit tests for closed-form spectra of split joins of regular graphs.

Every closed form is compared with the Jacobi spectrum of the constructed
join, and the quotient cubics with their published expanded coefficients.
"""

from fractions import Fraction
from itertools import product

import pytest

from spectrajoin.algebra import Poly, charpoly
from spectrajoin.core.exceptions import PreconditionException
from spectrajoin.graphs import MatrixKind, make_family, parse_graph_spec
from spectrajoin.joins import JoinKind, join
from spectrajoin.spectra import (
    closed_form_spectrum,
    nns_normalized_spectrum,
    nns_quotient,
    numeric_spectrum,
    split_eig_set,
)

G1_CORPUS = ["K2", "K3", "K4", "C4", "C5", "C6", "Petersen"]
G2_CORPUS = ["K1", "K2", "C4", "E2"]
COMBINATIONS = [
    (JoinKind.NS, MatrixKind.NL),
    (JoinKind.NNS, MatrixKind.A),
    (JoinKind.NNS, MatrixKind.L),
    (JoinKind.NNS, MatrixKind.Q),
    (JoinKind.NNS, MatrixKind.NL),
]


class TestClosedFormOracle:
    """Test closed forms against direct numeric spectra."""

    @pytest.mark.parametrize("join_kind,matrix_kind", COMBINATIONS,
                             ids=[f"{j.value}-{m.value}" for j, m in COMBINATIONS])
    @pytest.mark.parametrize("s1", G1_CORPUS)
    def test_matches_direct_spectrum(self, join_kind, matrix_kind, s1):
        """Test the assembled spectrum equals the spectrum of the join."""
        g1 = parse_graph_spec(s1)
        for s2 in G2_CORPUS:
            g2 = parse_graph_spec(s2)
            closed = closed_form_spectrum(join_kind, matrix_kind, g1, g2)
            direct = numeric_spectrum(join(join_kind, g1, g2), matrix_kind)
            assert closed.size == 2 * g1.n + g2.n
            assert closed.matches(direct, tolerance=1e-7), f"{s1}, {s2}: {closed.max_deviation(direct)}"

    def test_string_join_kind(self):
        """Test the dispatcher accepts join kinds as strings."""
        g1, g2 = make_family("C", 4), make_family("K", 2)
        assert closed_form_spectrum("nns", "A", g1, g2) == closed_form_spectrum(JoinKind.NNS, MatrixKind.A, g1, g2)


class TestPreconditions:
    """Test inputs without a closed form."""

    def test_no_closed_form_for_ns_adjacency(self):
        """Test NS with A has no closed form."""
        with pytest.raises(PreconditionException):
            closed_form_spectrum("ns", "A", make_family("K", 3), make_family("K", 2))

    def test_non_regular_input(self):
        """Test a non-regular graph raises."""
        with pytest.raises(PreconditionException):
            closed_form_spectrum("nns", "A", make_family("P", 3), make_family("K", 2))
        with pytest.raises(PreconditionException):
            closed_form_spectrum("nns", "L", make_family("K", 3), make_family("P", 3))

    @pytest.mark.parametrize("join_kind", ["ns", "nns"])
    def test_normalized_needs_positive_degree(self, join_kind):
        """Test r1 = 0 raises for NL."""
        with pytest.raises(PreconditionException):
            closed_form_spectrum(join_kind, "NL", make_family("E", 3), make_family("K", 2))


def published_cubic(kind, n1, r1, n2, r2):
    """Expanded cubic factors, lowest degree first."""
    k = n1 - r1 - 1
    if kind is MatrixKind.A:
        return Poly([r2 * k * k, r1 * r2 - k * k - n1 * n2, -(r1 + r2), 1])
    if kind is MatrixKind.L:
        return Poly([
            0,
            n1 * n2 - n2 * r1 - n2 + 2 * n1 * n1 - 2 * r1 * n1 - 2 * n1,
            2 * r1 - 3 * n1 - n2 + 2,
            1,
        ])
    return Poly([
        2 * n1 * r1 * r1 + 2 * r1 * n1 - 2 * r1 * n1 * n1 - 2 * r2 * n1 * n2 + 2 * r1 * r2 * n2
        + 2 * r2 * n2 + 4 * r2 * r1 * r1 + 4 * r1 * r2 - 4 * r1 * r2 * n1,
        n1 * n2 - n2 * r1 - n2 + 2 * n1 * n1 + 2 * r1 * n1 - 2 * n1 - 2 * r1 - 2 * r1 * r1
        + 4 * r2 * n1 - 4 * r2 + 2 * r2 * n2,
        2 - 3 * n1 - n2 - 2 * r2,
        1,
    ])


class TestQuotientCubics:
    """Test the NNS quotient matrices."""

    @pytest.mark.parametrize("kind", [MatrixKind.A, MatrixKind.L, MatrixKind.Q])
    def test_charpoly_matches_published_cubic(self, kind):
        """Test det(xI - B) equals the expanded cubic over a parameter range."""
        for n1, n2 in product(range(1, 7), range(1, 5)):
            for r1, r2 in product(range(n1), range(n2)):
                assert charpoly(nns_quotient(kind, n1, r1, n2, r2)) == published_cubic(kind, n1, r1, n2, r2)

    def test_normalized_quotient_rows(self):
        """Test the NL quotient has zero row sums."""
        b = nns_quotient(MatrixKind.NL, 4, 2, 3, 2)
        assert all(sum(row) == 0 for row in b.rows)
        assert b[2, 0] == -Fraction(4, 6)


class TestSplitCases:
    """Test the three cases of the NNS normalized Laplacian spectrum."""

    @pytest.mark.parametrize("spec,case,size", [("C4", "a", 0), ("K3", "b", 2), ("C6", "c", 2)])
    def test_split_eig_set(self, spec, case, size):
        """Test the case and size of the set of -1 eigenvalues."""
        split = split_eig_set(parse_graph_spec(spec))
        assert (split.case, split.size) == (case, size)

    @pytest.mark.parametrize("spec", ["C4", "K3", "C6"])
    def test_each_case_matches_direct(self, spec):
        """Test each case against the spectrum of the join with K2."""
        g1, g2 = parse_graph_spec(spec), make_family("K", 2)
        closed = nns_normalized_spectrum(g1, g2)
        assert closed.matches(numeric_spectrum(join("nns", g1, g2), MatrixKind.NL), tolerance=1e-7)

    def test_complete_g1_isolated_split_vertices(self):
        """Test K3 gives a zero for each isolated split vertex plus one for the rest."""
        spectrum = nns_normalized_spectrum(make_family("K", 3), make_family("C", 4))
        assert spectrum.multiplicity(0) == 4
