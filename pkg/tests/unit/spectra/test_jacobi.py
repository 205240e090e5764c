"""
Unit tests for the Jacobi eigenvalue solver.
"""

import logging
import random
import re
from itertools import combinations

import numpy as np
import pytest

from spectrajoin.graphs import Graph, MatrixKind, numeric_matrix, petersen
from spectrajoin.spectra import jacobi, jacobi_eigenvalues


class TestJacobi:
    """Test against numpy.linalg.eigvalsh."""

    @pytest.mark.parametrize("n", [1, 2, 5, 12])
    def test_random_symmetric(self, n):
        """Test random symmetric matrices."""
        generator = np.random.default_rng(n)
        a = generator.normal(size=(n, n))
        a = a + a.T
        assert np.allclose(jacobi_eigenvalues(a), np.linalg.eigvalsh(a), atol=1e-9)

    def test_graph_matrix(self):
        """Test the Petersen Laplacian spectrum 0, 2^5, 5^4."""
        values = jacobi_eigenvalues(numeric_matrix(petersen(), MatrixKind.L))
        assert np.allclose(values, [0, 2, 2, 2, 2, 2, 5, 5, 5, 5], atol=1e-9)

    def test_already_diagonal(self):
        """Test a diagonal matrix is returned sorted."""
        assert list(jacobi_eigenvalues(np.diag([3.0, -1.0, 2.0]))) == [-1.0, 2.0, 3.0]

    def test_empty(self):
        """Test the empty matrix."""
        assert jacobi_eigenvalues(np.zeros((0, 0))).size == 0

    def test_rejects_asymmetric(self):
        """Test non-symmetric and non-square input raises."""
        with pytest.raises(ValueError):
            jacobi_eigenvalues(np.array([[0.0, 1.0], [0.0, 0.0]]))
        with pytest.raises(ValueError):
            jacobi_eigenvalues(np.zeros((2, 3)))


class TestJacobiStopping:
    """Test the off-diagonal stopping rule."""

    @staticmethod
    def twenty_edge_graph():
        pairs = list(combinations(range(10), 2))
        return Graph.from_edges(10, random.Random(7).sample(pairs, 20))

    def test_off_diagonal_norm_of_diagonal_is_zero(self):
        """Test a large diagonal gives an exact zero rather than a rounding floor."""
        a = np.diag([1.0e8, 3.0, -7.5])
        a[0, 1] = a[1, 0] = 1.0e-9
        assert jacobi.off_diagonal_norm(np.diag(np.diag(a))) == 0.0
        assert jacobi.off_diagonal_norm(a) == pytest.approx(np.sqrt(2) * 1.0e-9)

    def test_laplacian_converges_early(self, caplog):
        """Test a 10-vertex, 20-edge Laplacian stops well before the sweep limit."""
        caplog.set_level(logging.DEBUG, logger=jacobi.__name__)
        matrix = numeric_matrix(self.twenty_edge_graph(), MatrixKind.L)
        values = jacobi_eigenvalues(matrix)

        assert np.allclose(values, np.linalg.eigvalsh(matrix), atol=1e-9)
        assert not [r for r in caplog.records if r.levelno >= logging.WARNING]
        converged = [re.search(r"after (\d+) sweeps", r.getMessage()) for r in caplog.records]
        sweeps = [int(m.group(1)) for m in converged if m]
        assert sweeps and sweeps[0] < 20

    @pytest.mark.parametrize("kind", [MatrixKind.A, MatrixKind.L, MatrixKind.Q])
    def test_random_graphs_never_warn(self, caplog, kind):
        """Test seeded G(n, 1/2) graphs up to 12 vertices converge without a warning."""
        rng = random.Random(20240601)
        for _ in range(40):
            n = rng.randint(2, 12)
            edges = [(i, j) for i, j in combinations(range(n), 2) if rng.random() < 0.5]
            jacobi_eigenvalues(numeric_matrix(Graph.from_edges(n, edges), kind))
        assert not [r for r in caplog.records if r.levelno >= logging.WARNING]
