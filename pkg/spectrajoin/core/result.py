"""
Result type for failures that are expected outcomes rather than errors.

Used where a computation may legitimately have no value, e.g. evaluating a
theorem factor at a sample point that is a pole:

    >>> Result.ok(Fraction(3, 4)).map(lambda v: v * 4).unwrap()
    Fraction(3, 1)
    >>> Result.err("pole at x=2").unwrap_or(None) is None
    True
"""

from dataclasses import dataclass
from typing import Callable, Generic, TypeVar

T = TypeVar("T")
U = TypeVar("U")


class Result(Generic[T]):
    """Either ``Ok(value)`` or ``Err(reason)``."""

    @staticmethod
    def ok(value: T) -> "Result[T]":
        return Ok(value)

    @staticmethod
    def err(reason: str) -> "Result[T]":
        return Err(reason)

    def is_ok(self) -> bool:
        raise NotImplementedError

    def is_err(self) -> bool:
        return not self.is_ok()

    def unwrap(self) -> T:
        """Return the value or raise ``ValueError`` carrying the reason."""
        raise NotImplementedError

    def unwrap_or(self, default: T) -> T:
        raise NotImplementedError

    def map(self, fn: Callable[[T], U]) -> "Result[U]":
        raise NotImplementedError

    def and_then(self, fn: Callable[[T], "Result[U]"]) -> "Result[U]":
        """Chain a computation that may itself fail."""
        raise NotImplementedError


@dataclass(frozen=True)
class Ok(Result[T]):
    value: T

    def is_ok(self) -> bool:
        return True

    def unwrap(self) -> T:
        return self.value

    def unwrap_or(self, default: T) -> T:
        return self.value

    def map(self, fn: Callable[[T], U]) -> "Result[U]":
        return Ok(fn(self.value))

    def and_then(self, fn: Callable[[T], "Result[U]"]) -> "Result[U]":
        return fn(self.value)


@dataclass(frozen=True)
class Err(Result[T]):
    reason: str

    def is_ok(self) -> bool:
        return False

    def unwrap(self) -> T:
        raise ValueError(f"Called unwrap on an Err value: {self.reason}")

    def unwrap_or(self, default: T) -> T:
        return default

    def map(self, fn: Callable[[T], U]) -> "Result[U]":
        return self

    def and_then(self, fn: Callable[[T], "Result[U]"]) -> "Result[U]":
        return self
