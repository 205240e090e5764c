"""
Custom exception hierarchy for spectrajoin.

Provides typed exceptions so callers can tell bad input apart from a
mathematical precondition that does not hold and from a failed certificate.
"""


class SpectraJoinException(Exception):
    """Base exception for all spectrajoin errors."""

    pass


class ValidationException(SpectraJoinException):
    """Raised when user input fails validation.

    Examples:
        - Unknown graph family name
        - Malformed graph spec token
        - Out-of-range vertex count for a search
    """

    pass


class GraphException(SpectraJoinException):
    """Raised when graph data is structurally invalid.

    Examples:
        - Loop on a vertex
        - Edge endpoint outside 0..n-1
    """

    pass


class CodecException(SpectraJoinException):
    """Raised when graph6 or JSON graph text cannot be decoded.

    Examples:
        - Character outside the printable graph6 range
        - Truncated adjacency payload
        - Vertex count beyond the supported size
    """

    pass


class AlgebraException(SpectraJoinException):
    """Raised when an exact-algebra operation is undefined.

    Examples:
        - Duplicated interpolation node
        - Division by the zero polynomial
        - Non-square matrix passed to a determinant
    """

    pass


class SingularMatrixException(AlgebraException):
    """Raised when a matrix that must be inverted is singular."""

    pass


class PreconditionException(SpectraJoinException):
    """Raised when a mathematical precondition does not hold.

    Examples:
        - Closed-form spectrum requested for a non-regular graph
        - Normalized Laplacian transfer with degree 0
        - NICS template inputs that are not cospectral
    """

    pass


class VerificationException(SpectraJoinException):
    """Raised when a certificate or closed form fails its independent check.

    A failure here points at a bug, never at bad input.
    """

    pass


class SearchException(SpectraJoinException):
    """Raised when regular-graph enumeration cannot run.

    Examples:
        - Vertex count beyond the desk-scale limit
        - Degree not in 0..n-1
    """

    pass


class CacheException(SpectraJoinException):
    """Raised when the on-disk search cache is unreadable or corrupt."""

    pass
