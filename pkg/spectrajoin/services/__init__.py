"""
Services: batch execution, the search cache and orchestration for the CLI.
"""

from .batch_runner import BatchRunner, BatchStats
from .search_cache import SearchCache
from .search_service import RegularSearchService
from .verification_service import VerificationService, run_theorem

__all__ = [
    "BatchRunner",
    "BatchStats",
    "SearchCache",
    "RegularSearchService",
    "VerificationService",
    "run_theorem",
]
