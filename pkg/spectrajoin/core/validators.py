"""
Input validation for CLI arguments and service entry points.

Provides reusable validators for the identifiers the tool accepts.
"""

from typing import List, Sequence, Set

from ..config import settings
from .exceptions import ValidationException


class MatrixKindValidator:
    """Validator for graph matrix kinds."""

    ALLOWED_KINDS: Set[str] = set(settings.MATRIX_KINDS)

    @classmethod
    def validate_kind(cls, kind: str) -> str:
        """Validate a matrix kind.

        Args:
            kind: One of A, L, Q, NL (case-insensitive).

        Returns:
            The canonical uppercase kind.

        Raises:
            ValidationException: If the kind is unknown.
        """
        if not isinstance(kind, str):
            raise ValidationException(f"Matrix kind must be a string, got {type(kind)}")

        kind = kind.strip().upper()
        if kind not in cls.ALLOWED_KINDS:
            raise ValidationException(
                f"Invalid matrix kind: {kind}. "
                f"Allowed: {', '.join(sorted(cls.ALLOWED_KINDS))}"
            )
        return kind

    @classmethod
    def validate_kinds(cls, kinds: Sequence[str]) -> List[str]:
        if not kinds:
            raise ValidationException("At least one matrix kind is required")
        return [cls.validate_kind(k) for k in kinds]


class TheoremValidator:
    """Validator for theorem identifiers."""

    CHARPOLY_THEOREMS: Set[str] = set(settings.CHARPOLY_THEOREMS)
    SPECTRUM_THEOREMS: Set[str] = set(settings.SPECTRUM_THEOREMS)

    @classmethod
    def validate_theorem(cls, theorem: str) -> str:
        theorem = str(theorem).strip()
        allowed = cls.CHARPOLY_THEOREMS | cls.SPECTRUM_THEOREMS
        if theorem not in allowed:
            raise ValidationException(
                f"Invalid theorem: {theorem}. Allowed: {', '.join(sorted(allowed))}"
            )
        return theorem


class TemplateValidator:
    """Validator for NICS factory templates."""

    ALLOWED_TEMPLATES: Set[str] = set(settings.NICS_TEMPLATES)

    @classmethod
    def validate_template(cls, template: str) -> str:
        template = str(template).strip().lower()
        if template not in cls.ALLOWED_TEMPLATES:
            raise ValidationException(
                f"Invalid template: {template}. "
                f"Allowed: {', '.join(sorted(cls.ALLOWED_TEMPLATES))}"
            )
        return template


class SearchSizeValidator:
    """Validator for regular-graph enumeration sizes."""

    MAX_VERTICES = 10

    @classmethod
    def validate_size(cls, n: int, r: int, max_vertices: int = MAX_VERTICES) -> tuple:
        """Validate a (vertex count, degree) search request.

        Raises:
            ValidationException: If n is outside 1..max_vertices or r outside 0..n-1.
        """
        if not isinstance(n, int) or not isinstance(r, int):
            raise ValidationException("Vertex count and degree must be integers")
        if n < 1 or n > max_vertices:
            raise ValidationException(
                f"Vertex count {n} out of range. Allowed: 1..{max_vertices}"
            )
        if r < 0 or r >= n:
            raise ValidationException(f"Degree {r} out of range. Allowed: 0..{n - 1}")
        return n, r


class TrialsValidator:
    """Validator for randomised verification runs."""

    MAX_TRIALS = 10_000

    @classmethod
    def validate_trials(cls, trials: int) -> int:
        if not isinstance(trials, int) or trials < 1:
            raise ValidationException(f"Trials must be a positive integer, got {trials}")
        if trials > cls.MAX_TRIALS:
            raise ValidationException(f"Too many trials: {trials} (max {cls.MAX_TRIALS})")
        return trials
