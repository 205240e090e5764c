"""
Unit tests for the Result type.
"""

from fractions import Fraction

import pytest

from spectrajoin.core.result import Err, Ok, Result


class TestResultCreation:
    """Test Result creation."""

    def test_create_ok_result(self):
        """Test creating an Ok result."""
        result = Result.ok(42)
        assert result.is_ok()
        assert not result.is_err()
        assert isinstance(result, Ok)

    def test_create_err_result(self):
        """Test creating an Err result."""
        result = Result.err("pole at x=3")
        assert result.is_err()
        assert not result.is_ok()
        assert isinstance(result, Err)
        assert result.reason == "pole at x=3"


class TestResultUnwrap:
    """Test unwrapping results."""

    def test_unwrap_ok_returns_value(self):
        """Test unwrap on Ok returns the value."""
        assert Result.ok(Fraction(3, 4)).unwrap() == Fraction(3, 4)

    def test_unwrap_err_raises_value_error(self):
        """Test unwrap on Err raises ValueError carrying the reason."""
        with pytest.raises(ValueError) as exc_info:
            Result.err("singular block").unwrap()
        assert "singular block" in str(exc_info.value)

    def test_unwrap_or(self):
        """Test unwrap_or returns the value for Ok and the default for Err."""
        assert Result.ok(1).unwrap_or(5) == 1
        assert Result.err("x").unwrap_or(5) == 5


class TestResultChaining:
    """Test map and and_then."""

    def test_map_ok_applies_function(self):
        """Test map on Ok applies the function."""
        assert Result.ok(5).map(lambda x: x * 2).unwrap() == 10

    def test_map_err_is_identity(self):
        """Test map on Err leaves it untouched."""
        err = Result.err("nope")
        assert err.map(lambda x: x * 2) is err

    def test_and_then_chains_failures(self):
        """Test and_then short-circuits on the first Err."""
        def halve(x):
            return Result.ok(x // 2) if x % 2 == 0 else Result.err(f"{x} is odd")

        assert Result.ok(8).and_then(halve).and_then(halve).unwrap() == 2
        chained = Result.ok(6).and_then(halve).and_then(halve)
        assert chained.is_err()
        assert chained.reason == "3 is odd"
