"""
Unit tests for the refinement-based isomorphism test.

networkx serves as an independent oracle on random inputs.
"""

import networkx as nx
import pytest

from spectrajoin.graphs import (
    Graph,
    are_isomorphic,
    disjoint_union,
    find_isomorphism,
    invariant_key,
    make_family,
    petersen,
)


def random_graph(rng, n, p=0.5):
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])


class TestFindIsomorphism:
    """Test isomorphism decisions and witnesses."""

    def test_relabelled_graph(self, rng):
        """Test a relabelled copy is found with a valid witness."""
        g = petersen()
        mapping = list(range(g.n))
        rng.shuffle(mapping)
        h = g.relabel(mapping)
        ok, witness = are_isomorphic(g, h)
        assert ok
        assert all(h.has_edge(witness[u], witness[v]) for u, v in g.edges())

    def test_same_degrees_not_isomorphic(self):
        """Test C6 and 2K3 are told apart."""
        c6 = make_family("C", 6)
        two_triangles = disjoint_union(make_family("K", 3), make_family("K", 3))
        assert find_isomorphism(c6, two_triangles) is None

    def test_cubic_on_six(self):
        """Test K3,3 and the prism are not isomorphic."""
        prism = Graph.from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)])
        assert not are_isomorphic(make_family("K", 3, 3), prism)[0]

    def test_empty_graph(self):
        """Test the graph on no vertices."""
        assert find_isomorphism(Graph.empty(0), Graph.empty(0)) == []

    def test_different_orders(self):
        """Test graphs of different order are not isomorphic."""
        assert find_isomorphism(make_family("K", 2), make_family("E", 3)) is None

    @pytest.mark.parametrize("n", [5, 6, 7])
    def test_agrees_with_networkx(self, rng, n):
        """Test verdicts on random pairs with equal edge counts."""
        checked = 0
        while checked < 15:
            g, h = random_graph(rng, n), random_graph(rng, n)
            if g.edge_count != h.edge_count:
                continue
            checked += 1
            expected = nx.is_isomorphic(g.to_networkx(), h.to_networkx())
            assert are_isomorphic(g, h)[0] == expected


class TestInvariantKey:
    """Test the bucketing invariant."""

    def test_invariant_under_relabelling(self, rng):
        """Test the key does not depend on labels."""
        g = random_graph(rng, 8)
        mapping = list(range(8))
        rng.shuffle(mapping)
        assert invariant_key(g) == invariant_key(g.relabel(mapping))

    def test_separates_triangle_counts(self):
        """Test C6 and 2K3 get different keys."""
        two_triangles = disjoint_union(make_family("K", 3), make_family("K", 3))
        assert invariant_key(make_family("C", 6)) != invariant_key(two_triangles)
