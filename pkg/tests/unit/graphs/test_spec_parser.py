"""
Unit tests for the graph spec mini-language.
"""

import pytest

from spectrajoin.core.exceptions import ValidationException
from spectrajoin.graphs import are_isomorphic, make_family, parse_graph_spec, try_parse_graph_spec


class TestParseGraphSpec:
    """Test spec parsing."""

    def test_family_terms(self):
        """Test single family terms."""
        assert parse_graph_spec("K4") == make_family("K", 4)
        assert parse_graph_spec("K1,4") == make_family("S", 4)
        assert parse_graph_spec("Petersen").n == 10

    def test_union(self):
        """Test C4+K1."""
        g = parse_graph_spec("C4+K1")
        assert (g.n, g.edge_count) == (5, 4)
        assert g.degree(4) == 0

    def test_copies(self):
        """Test the copy prefix."""
        g = parse_graph_spec("2K3")
        assert (g.n, g.edge_count) == (6, 6)

    def test_graph6_literal(self):
        """Test a g6: term."""
        assert parse_graph_spec("g6:A_") == make_family("K", 2)

    def test_whitespace_around_terms(self):
        """Test spaces around + are ignored."""
        assert are_isomorphic(parse_graph_spec("K2 + K1"), parse_graph_spec("P2+E1"))[0]

    @pytest.mark.parametrize("text", ["", "K4+", "X3", "P2,3", "0K3", "C2", "g6:A"])
    def test_invalid_gives_err(self, text):
        """Test invalid specs give an Err."""
        assert try_parse_graph_spec(text).is_err()

    def test_parse_raises(self):
        """Test the raising variant."""
        with pytest.raises(ValidationException):
            parse_graph_spec("Q7")
