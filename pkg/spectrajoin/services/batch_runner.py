"""
Batch execution of independent pure jobs, optionally across processes.

With one worker the jobs run inline in submission order; with more they go
to a ProcessPoolExecutor and are collected as they complete. Jobs must be
module-level functions with picklable arguments.
"""

import logging
import time
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Hashable, List, Optional, Sequence, Tuple

logger = logging.getLogger(__name__)


@dataclass
class BatchStats:
    """Counts and timings for one batch run, keyed by ``str(job key)``."""

    total_jobs: int = 0
    successful_jobs: int = 0
    failed_jobs: int = 0
    started: Optional[float] = None
    finished: Optional[float] = None
    errors: Dict[str, str] = field(default_factory=dict)
    durations: Dict[str, float] = field(default_factory=dict)

    @property
    def wall_seconds(self) -> float:
        if self.started is None or self.finished is None:
            return 0.0
        return self.finished - self.started

    @property
    def slowest(self) -> Optional[str]:
        return max(self.durations, key=self.durations.get) if self.durations else None

    def to_dict(self) -> Dict[str, Any]:
        rate = 100.0 * self.successful_jobs / self.total_jobs if self.total_jobs else 0
        return {
            "total_jobs": self.total_jobs,
            "successful": self.successful_jobs,
            "failed": self.failed_jobs,
            "success_rate": rate,
            "wall_seconds": round(self.wall_seconds, 3),
            "cpu_seconds": round(sum(self.durations.values()), 3),
            "slowest_job": self.slowest,
            "errors": dict(self.errors),
        }

    def __str__(self) -> str:
        text = (
            f"Batch: {self.total_jobs} jobs, Succeeded: {self.successful_jobs}, "
            f"Failed: {self.failed_jobs}, {self.wall_seconds:.2f}s wall"
        )
        failures = "".join(f"\n  {key}: {error}" for key, error in self.errors.items())
        return text + failures


def _timed(func: Callable, args: Tuple) -> Tuple[Any, float]:
    start = time.perf_counter()
    result = func(*args)
    return result, time.perf_counter() - start


class BatchRunner:
    """Runs a function over many argument tuples."""

    def __init__(self, max_workers: int = 1):
        """
        Args:
            max_workers: Worker processes; 1 runs everything inline.
        """
        if max_workers < 1:
            raise ValueError(f"max_workers must be >= 1, got {max_workers}")
        self.max_workers = max_workers
        self.stats: Optional[BatchStats] = None

    def run(
        self, func: Callable, jobs: Dict[Hashable, Tuple]
    ) -> Tuple[Dict[Hashable, Any], BatchStats]:
        """Call ``func(*args)`` for every job.

        A failing job is recorded in the statistics and left out of the
        results; the others still run.

        Returns:
            Tuple of (results keyed like ``jobs``, statistics).
        """
        self.stats = BatchStats()
        self.stats.started = time.perf_counter()
        self.stats.total_jobs = len(jobs)
        results: Dict[Hashable, Any] = {}

        logger.info(f"Starting batch of {len(jobs)} jobs with {self.max_workers} worker(s)")

        if self.max_workers == 1:
            for key, args in jobs.items():
                try:
                    self._record(key, results, _timed(func, args))
                except Exception as e:
                    self._record_failure(key, e)
        else:
            with ProcessPoolExecutor(max_workers=self.max_workers) as executor:
                future_to_key = {
                    executor.submit(_timed, func, args): key for key, args in jobs.items()
                }
                for future in as_completed(future_to_key):
                    key = future_to_key[future]
                    try:
                        self._record(key, results, future.result())
                    except Exception as e:
                        self._record_failure(key, e)

        self.stats.finished = time.perf_counter()
        logger.info(str(self.stats))
        return results, self.stats

    def map(self, func: Callable, items: Sequence) -> List:
        """Ordered ``[func(item) for item in items]``; raises on the first failure."""
        results, stats = self.run(func, {i: (item,) for i, item in enumerate(items)})
        if stats.failed_jobs:
            key, error = next(iter(stats.errors.items()))
            raise RuntimeError(f"Job {key} failed: {error}")
        return [results[i] for i in range(len(items))]

    def _record(self, key: Hashable, results: Dict, outcome: Tuple[Any, float]) -> None:
        value, duration = outcome
        results[key] = value
        self.stats.successful_jobs += 1
        self.stats.durations[str(key)] = duration
        logger.debug(f"✓ job {key} finished in {duration:.3f}s")

    def _record_failure(self, key: Hashable, error: Exception) -> None:
        self.stats.failed_jobs += 1
        self.stats.errors[str(key)] = str(error)
        logger.error(f"✗ job {key} failed: {error}")
