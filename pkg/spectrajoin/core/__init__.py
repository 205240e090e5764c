"""
spectrajoin core module

Exceptions, the Result type, validators and report DTOs shared by every layer.
"""

from .exceptions import (
    SpectraJoinException,
    ValidationException,
    GraphException,
    CodecException,
    AlgebraException,
    SingularMatrixException,
    PreconditionException,
    VerificationException,
    SearchException,
    CacheException,
)
from .result import Result, Ok, Err
from .validators import (
    MatrixKindValidator,
    TheoremValidator,
    TemplateValidator,
    SearchSizeValidator,
    TrialsValidator,
)
from .dtos import (
    TheoremReportDTO,
    OracleReportDTO,
    NicsReportDTO,
    ProbeReportDTO,
    DeviationDTO,
    ReproduceEntryDTO,
)

__all__ = [
    # Exceptions
    "SpectraJoinException",
    "ValidationException",
    "GraphException",
    "CodecException",
    "AlgebraException",
    "SingularMatrixException",
    "PreconditionException",
    "VerificationException",
    "SearchException",
    "CacheException",
    # Result type
    "Result",
    "Ok",
    "Err",
    # Validators
    "MatrixKindValidator",
    "TheoremValidator",
    "TemplateValidator",
    "SearchSizeValidator",
    "TrialsValidator",
    # DTOs
    "TheoremReportDTO",
    "OracleReportDTO",
    "NicsReportDTO",
    "ProbeReportDTO",
    "DeviationDTO",
    "ReproduceEntryDTO",
]
