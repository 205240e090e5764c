"""
Unit tests for the NICS pair factories.

Templates need a non-isomorphic A-cospectral regular pair, and the smallest
ones have ten vertices, so the certification tests are marked slow.
"""

import pytest

from spectrajoin.core.exceptions import PreconditionException, ValidationException
from spectrajoin.graphs import Graph, make_family
from spectrajoin.lab import TEMPLATES, build_pair, nics_pair, require_regular_cospectral
from spectrajoin.lab.factories import KIRCHHOFF_KINDS

PRISM = Graph.from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)])


class TestRequireRegularCospectral:
    """Test the shared precondition check."""

    def test_returns_degree(self):
        """Test an isomorphic pair passes when isomorphism is allowed."""
        assert require_regular_cospectral(make_family("C", 5), make_family("C", 5), "G1 and H1", False) == 2

    def test_non_regular(self, f_graph, h_graph):
        """Test F and H from the small example are not regular."""
        with pytest.raises(PreconditionException, match="regular"):
            require_regular_cospectral(f_graph, h_graph, "F and H", True)

    def test_isomorphic_refused(self):
        """Test isomorphic graphs are refused when non-isomorphism is required."""
        with pytest.raises(PreconditionException, match="isomorphic"):
            require_regular_cospectral(make_family("C", 4), make_family("K", 2, 2), "F and H", True)

    def test_not_cospectral(self):
        """Test K3,3 and the prism are cubic but not cospectral."""
        with pytest.raises(PreconditionException, match="cospectral"):
            require_regular_cospectral(make_family("K", 3, 3), PRISM, "F and H", True)

    def test_different_degrees(self):
        """Test C4 and K4 differ in degree."""
        with pytest.raises(PreconditionException):
            require_regular_cospectral(make_family("C", 4), make_family("K", 4), "F and H", True)


class TestBuildPair:
    """Test template dispatch and arity."""

    def test_templates(self):
        """Test the six templates and their kinds."""
        assert sorted(TEMPLATES) == ["cor4.4a", "cor4.4b", "cor4.5a", "cor4.5b", "cor5.2", "cor6.5"]
        assert TEMPLATES["cor4.4a"][2] == KIRCHHOFF_KINDS
        assert len(TEMPLATES["cor6.5"][2]) == 4

    def test_unknown_template(self):
        """Test an unknown template raises."""
        with pytest.raises(ValidationException):
            build_pair("cor9.9", [])

    def test_wrong_arity(self):
        """Test the graph count is enforced."""
        c4 = make_family("C", 4)
        with pytest.raises(ValidationException):
            build_pair("cor4.4a", [c4, c4])
        with pytest.raises(ValidationException):
            build_pair("cor5.2", [c4, c4, c4])

    def test_zero_degree_g1(self, f_graph, h_graph):
        """Test cor5.2 refuses r1 = 0 before looking at G2 and H2."""
        e2 = make_family("E", 2)
        with pytest.raises(PreconditionException, match="r1"):
            build_pair("cor5.2", [e2, e2, f_graph, h_graph])


@pytest.mark.slow
class TestCertifiedPairs:
    """Test every template certifies a NICS pair."""

    @pytest.mark.parametrize("template", ["cor4.4a", "cor4.4b", "cor4.5a", "cor4.5b"])
    def test_single_graph_templates(self, regular_cospectral_pair, template):
        """Test G = P3 with the ten-vertex pair."""
        f, h = regular_cospectral_pair
        report = nics_pair(template, [make_family("P", 3), f, h])
        assert report.is_nics
        assert set(report.cospectral) == {"A", "L", "Q"}

    @pytest.mark.parametrize("template", ["cor5.2", "cor6.5"])
    def test_regular_templates(self, regular_cospectral_pair, template):
        """Test G1 = H1 = C4 with the ten-vertex pair, all four kinds."""
        g2, h2 = regular_cospectral_pair
        c4 = make_family("C", 4)
        report = nics_pair(template, [c4, c4, g2, h2])
        assert report.is_nics
        assert report.cospectral == {"A": True, "L": True, "Q": True, "NL": True}

    def test_join_order(self, regular_cospectral_pair):
        """Test cor4.5a puts the pair on the left."""
        f, h = regular_cospectral_pair
        left, right = build_pair("cor4.5a", [make_family("K", 2), f, h])
        assert left.n == 2 * f.n + 2
