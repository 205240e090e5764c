"""
Regular-graph search with caching and optional process parallelism.
"""

import logging
from typing import Iterable, List, Optional, Tuple

from ..core.exceptions import SearchException
from ..graphs.graph import Graph
from ..lab.search import SearchResult, find_regular_cospectral_pairs
from .batch_runner import BatchRunner
from .search_cache import SearchCache

logger = logging.getLogger(__name__)


class RegularSearchService:
    """Finds non-isomorphic cospectral regular graphs, consulting the cache first."""

    def __init__(
        self,
        runner: BatchRunner,
        cache: Optional[SearchCache] = None,
        max_vertices: int = 10,
        degrees: Iterable[int] = (3, 4, 5),
    ):
        """
        Args:
            runner: Spreads charpoly work over processes.
            cache: On-disk cache; None disables caching.
            max_vertices: Largest order accepted.
            degrees: Degrees tried by :meth:`first_pair`.
        """
        self.runner = runner
        self.cache = cache
        self.max_vertices = max_vertices
        self.degrees = tuple(degrees)
        logger.debug("RegularSearchService initialized")

    def search(self, n: int, r: int) -> SearchResult:
        if self.cache is not None:
            cached = self.cache.get(n, r)
            if cached is not None:
                return cached
        result = find_regular_cospectral_pairs(n, r, self.runner.map, self.max_vertices)
        if self.cache is not None:
            self.cache.put(result)
        return result

    def search_all_degrees(self, n: int) -> List[SearchResult]:
        """Results for every degree 0..n-1 with n * r even."""
        return [self.search(n, r) for r in range(n) if (n * r) % 2 == 0]

    def first_pair(self, n: int = 10) -> Tuple[Graph, Graph]:
        """The first cospectral pair over the configured degrees.

        Raises:
            SearchException: If no configured degree yields a pair.
        """
        for r in self.degrees:
            result = self.search(n, r)
            if result.pairs:
                logger.info(f"Using cospectral pair {result.pairs[0]} of {r}-regular graphs on {n} vertices")
                return result.pair_graphs()[0]
        raise SearchException(f"No cospectral regular pair on {n} vertices for degrees {self.degrees}")
