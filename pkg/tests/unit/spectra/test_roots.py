"""
Unit tests for the quadratic and cubic real-root solvers.
"""

from fractions import Fraction

import numpy as np
import pytest

from spectrajoin.core.exceptions import AlgebraException, VerificationException
from spectrajoin.spectra import solve_cubic_real, solve_quadratic_real
from spectrajoin.spectra.roots import exact_sqrt


class TestExactSqrt:
    """Test rational square roots."""

    def test_perfect_squares(self):
        """Test squares of rationals."""
        assert exact_sqrt(Fraction(9, 4)) == Fraction(3, 2)
        assert exact_sqrt(Fraction(0)) == 0

    def test_non_squares(self):
        """Test non-squares and negatives give None."""
        assert exact_sqrt(Fraction(2)) is None
        assert exact_sqrt(Fraction(-4)) is None


class TestQuadratic:
    """Test the quadratic solver."""

    def test_rational_roots_stay_exact(self):
        """Test x^2 - 5x + 6 gives exact 2 and 3."""
        roots = solve_quadratic_real(1, -5, 6)
        assert roots == [Fraction(2), Fraction(3)]
        assert all(isinstance(r, Fraction) for r in roots)

    def test_irrational_roots(self):
        """Test x^2 - x - 1 gives the golden ratio pair."""
        low, high = solve_quadratic_real(1, -1, -1)
        assert high == pytest.approx((1 + 5 ** 0.5) / 2)
        assert low == pytest.approx((1 - 5 ** 0.5) / 2)

    def test_float_coefficients(self):
        """Test float input."""
        assert solve_quadratic_real(2.0, 0.0, -8.0) == pytest.approx([-2.0, 2.0])

    def test_double_root(self):
        """Test a zero discriminant."""
        assert solve_quadratic_real(1, -2, 1) == [1, 1]

    def test_non_real(self):
        """Test a negative discriminant raises."""
        with pytest.raises(VerificationException):
            solve_quadratic_real(1, 0, 1)
        with pytest.raises(VerificationException):
            solve_quadratic_real(1.0, 0.0, 1.0)

    def test_not_quadratic(self):
        """Test a zero leading coefficient raises."""
        with pytest.raises(AlgebraException):
            solve_quadratic_real(0, 1, 1)


class TestCubic:
    """Test the cubic solver."""

    def test_rational_root_split_off(self):
        """Test (x - 1)(x - 2)(x - 3)."""
        assert solve_cubic_real(1, -6, 11, -6) == [1, 2, 3]

    def test_rational_root_with_irrational_pair(self):
        """Test x (x^2 - 2) keeps 0 exact."""
        roots = solve_cubic_real(1, 0, -2, 0)
        assert roots[1] == Fraction(0)
        assert roots[0] == pytest.approx(-2 ** 0.5)
        assert roots[2] == pytest.approx(2 ** 0.5)

    def test_three_irrational_roots(self):
        """Test x^3 - 3x + 1 against numpy."""
        roots = solve_cubic_real(1, 0, -3, 1)
        expected = np.sort(np.roots([1, 0, -3, 1]).real)
        assert roots == pytest.approx(list(expected), abs=1e-10)

    def test_float_coefficients(self):
        """Test float input with a non-monic leading coefficient."""
        roots = solve_cubic_real(2.0, -1.0, -4.0, 2.0)
        expected = np.sort(np.roots([2.0, -1.0, -4.0, 2.0]).real)
        assert roots == pytest.approx(list(expected), abs=1e-10)

    def test_triple_root(self):
        """Test (x - 1)^3 with float input."""
        assert solve_cubic_real(1.0, -3.0, 3.0, -1.0) == pytest.approx([1.0, 1.0, 1.0], abs=1e-6)

    def test_non_real_pair(self):
        """Test x^3 + x + 1 raises."""
        with pytest.raises(VerificationException):
            solve_cubic_real(1, 0, 1, 1)

    def test_not_cubic(self):
        """Test a zero leading coefficient raises."""
        with pytest.raises(AlgebraException):
            solve_cubic_real(0, 1, 1, 1)
