"""
On-disk JSON cache of regular-graph search results, one file per (n, r).
"""

import json
import logging
import os
from pathlib import Path
from typing import Optional

from marshmallow import ValidationError

from ..core.exceptions import CacheException, CodecException
from ..graphs.codecs import from_graph6, to_graph6
from ..lab.search import SearchResult
from ..schemas import SearchCacheSchema

logger = logging.getLogger(__name__)


class SearchCache:
    """Reads and writes ``search-n{n}-r{r}.json`` under one directory."""

    def __init__(self, cache_dir: str):
        self.cache_dir = Path(cache_dir)
        self.schema = SearchCacheSchema()

    def path_for(self, n: int, r: int) -> Path:
        return self.cache_dir / f"search-n{n}-r{r}.json"

    def load(self, n: int, r: int) -> SearchResult:
        """Read one entry.

        Raises:
            CacheException: If the file is missing, unreadable or invalid.
        """
        path = self.path_for(n, r)
        try:
            with open(path, "r", encoding="utf-8") as handle:
                data = self.schema.load(json.load(handle))
            graphs = tuple(from_graph6(text) for text in data["graphs"])
        except FileNotFoundError:
            raise CacheException(f"No cache entry at {path}")
        except (OSError, json.JSONDecodeError, ValidationError, CodecException) as e:
            raise CacheException(f"Corrupt cache entry {path}: {e}")
        if data["n"] != n or data["r"] != r:
            raise CacheException(f"Cache entry {path} holds n={data['n']}, r={data['r']}")
        return SearchResult(n, r, graphs, tuple(tuple(p) for p in data["pairs"]))

    def get(self, n: int, r: int) -> Optional[SearchResult]:
        """The cached result, or None on a miss. A corrupt file counts as a miss."""
        if not self.path_for(n, r).exists():
            logger.debug(f"Search cache miss for n={n}, r={r}")
            return None
        try:
            result = self.load(n, r)
        except CacheException as e:
            logger.warning(f"{e}; recomputing")
            return None
        logger.info(f"Search cache hit for n={n}, r={r}")
        return result

    def put(self, result: SearchResult) -> Path:
        """Write a result atomically (temporary file, then rename)."""
        payload = self.schema.dump({
            "n": result.n,
            "r": result.r,
            "graphs": [to_graph6(g) for g in result.graphs],
            "pairs": [list(p) for p in result.pairs],
        })
        path = self.path_for(result.n, result.r)
        try:
            self.cache_dir.mkdir(parents=True, exist_ok=True)
            tmp = path.with_suffix(".tmp")
            with open(tmp, "w", encoding="utf-8") as handle:
                json.dump(payload, handle)
            os.replace(tmp, path)
        except OSError as e:
            raise CacheException(f"Cannot write cache entry {path}: {e}")
        logger.debug(f"Cached search result for n={result.n}, r={result.r} at {path}")
        return path
