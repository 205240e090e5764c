"""
Unit tests for the regular-graph enumeration and cospectral search.
"""

import pytest

from spectrajoin.core.exceptions import SearchException
from spectrajoin.graphs import MatrixKind, are_isomorphic
from spectrajoin.lab import (
    find_regular_cospectral_pairs,
    regular_equivalence_check,
    regular_graph_classes,
    seed_regular_graph,
)
from spectrajoin.lab.search import double_edge_switches
from spectrajoin.spectra import exact_charpoly


class TestSeed:
    """Test the backtracking seed."""

    @pytest.mark.parametrize("n,r", [(4, 1), (6, 3), (7, 4), (10, 5), (5, 0)])
    def test_seed_is_regular(self, n, r):
        """Test the seed has the requested degree."""
        g = seed_regular_graph(n, r)
        assert g.n == n
        assert g.is_regular() == r

    @pytest.mark.parametrize("n,r", [(5, 3), (4, 4), (3, -1)])
    def test_impossible(self, n, r):
        """Test odd n * r and out-of-range degrees give None."""
        assert seed_regular_graph(n, r) is None


class TestSwitches:
    """Test double-edge switches."""

    def test_switches_keep_degrees(self):
        """Test every switch keeps the degree sequence."""
        seed = seed_regular_graph(8, 3)
        neighbours = list(double_edge_switches(seed))
        assert neighbours
        assert all(g.is_regular() == 3 for g in neighbours)
        assert all(g.edge_count == seed.edge_count for g in neighbours)


class TestClasses:
    """Test isomorphism class enumeration."""

    @pytest.mark.parametrize("n,r,count", [
        (4, 1, 1), (5, 2, 1), (6, 2, 2), (6, 3, 2), (6, 4, 1), (7, 2, 2), (8, 2, 3),
        (8, 4, 6), (8, 5, 3), (9, 2, 4), (9, 6, 4),
    ])
    def test_known_counts(self, n, r, count):
        """Test class counts of small regular graphs, disconnected ones included."""
        assert len(regular_graph_classes(n, r)) == count

    def test_cubic_on_eight(self, cubic_classes_on_eight):
        """Test the six cubic graphs on eight vertices are pairwise non-isomorphic."""
        classes = cubic_classes_on_eight
        assert len(classes) == 6
        for i in range(len(classes)):
            for j in range(i + 1, len(classes)):
                assert not are_isomorphic(classes[i], classes[j])[0]

    @pytest.mark.slow
    def test_quartic_on_nine(self):
        """Test the switch closure reaches all sixteen 4-regular graphs on nine vertices."""
        assert len(regular_graph_classes(9, 4)) == 16

    def test_odd_product(self):
        """Test no classes when n * r is odd."""
        assert regular_graph_classes(7, 3) == []


class TestCospectralSearch:
    """Test the charpoly bucketing."""

    @pytest.mark.parametrize("n,r", [(6, 3), (8, 3), (8, 4), (7, 4)])
    def test_no_pairs_below_ten_vertices(self, n, r):
        """Test small orders have no cospectral regular pairs."""
        result = find_regular_cospectral_pairs(n, r)
        assert result.pairs == ()
        assert result.class_count == len(regular_graph_classes(n, r))

    def test_mapper_is_used(self):
        """Test a custom mapper receives every class."""
        calls = []

        def mapper(func, items):
            calls.append(len(items))
            return [func(item) for item in items]

        result = find_regular_cospectral_pairs(8, 3, mapper=mapper)
        assert calls == [result.class_count]

    @pytest.mark.parametrize("n,r", [(11, 3), (6, 6), (0, 0)])
    def test_out_of_range(self, n, r):
        """Test sizes outside the limits raise SearchException."""
        with pytest.raises(SearchException):
            find_regular_cospectral_pairs(n, r)

    def test_raised_limit(self):
        """Test max_vertices lifts the default limit."""
        result = find_regular_cospectral_pairs(11, 1, max_vertices=11)
        assert result.class_count == 0


SMALL_REGULAR_GRID = [
    (n, r) for n in range(4, 10) for r in range(2, n - 1) if (n * r) % 2 == 0
]


@pytest.mark.slow
class TestBelowTenVertices:
    """Test every order below ten has no cospectral regular pair."""

    @pytest.mark.parametrize("n,r", SMALL_REGULAR_GRID)
    def test_no_pairs(self, container, n, r):
        """Test each (n, r) with 2 <= r <= n - 2 yields no pair and lands in the cache."""
        result = container.resolve("search_service").search(n, r)
        assert result.pairs == ()
        assert result.class_count >= 1

        cached = container.resolve("search_cache").get(n, r)
        assert cached is not None
        assert cached.class_count == result.class_count

    def test_grid_includes_the_nine_vertex_cases(self):
        """Test the grid reaches (9, 4) and (9, 6)."""
        assert (9, 4) in SMALL_REGULAR_GRID and (9, 6) in SMALL_REGULAR_GRID
        assert (9, 3) not in SMALL_REGULAR_GRID


@pytest.mark.slow
class TestTenVertices:
    """Test the smallest order with cospectral regular pairs."""

    def test_pair_is_cospectral_and_not_isomorphic(self, regular_cospectral_pair):
        """Test the first pair found is a genuine cospectral pair."""
        g, h = regular_cospectral_pair
        assert g.n == h.n == 10
        assert g.is_regular() == h.is_regular()
        assert exact_charpoly(g, MatrixKind.A) == exact_charpoly(h, MatrixKind.A)
        assert not are_isomorphic(g, h)[0]

    def test_all_kinds_agree(self, regular_cospectral_pair):
        """Test regular cospectral graphs are cospectral for every kind."""
        assert regular_equivalence_check(*regular_cospectral_pair)
