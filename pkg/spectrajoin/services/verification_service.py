"""
Theorem verification for fixed inputs and for seeded random trials.
"""

import logging
import random
from typing import Any, Dict, List, Tuple

from ..config import NumericConfig, VerifyConfig
from ..core.validators import TheoremValidator, TrialsValidator
from ..graphs.codecs import to_graph6
from ..graphs.graph import Graph
from ..lab.theorems import (
    CHARPOLY_THEOREMS,
    needs_positive_g1_degree,
    random_pair,
    random_regular_pair,
    verify_charpoly_theorem,
    verify_closed_form,
)
from .batch_runner import BatchRunner, BatchStats

logger = logging.getLogger(__name__)


def run_theorem(
    theorem: str, g1: Graph, g2: Graph, extra_points: int, tolerance: float,
    jacobi_tolerance: float = 1e-12, max_sweeps: int = 100,
) -> Dict[str, Any]:
    """One check as a JSON-ready dict with a ``passed`` flag and its inputs."""
    if theorem in CHARPOLY_THEOREMS:
        report = verify_charpoly_theorem(theorem, g1, g2, extra_points).to_dict()
        report["passed"] = report["equal"]
    else:
        report = verify_closed_form(
            theorem, g1, g2, tolerance, jacobi_tolerance, max_sweeps
        ).to_dict()
    report["g1"] = to_graph6(g1)
    report["g2"] = to_graph6(g2)
    return report


class VerificationService:
    """Runs the theorem checks."""

    def __init__(self, numeric: NumericConfig, verify: VerifyConfig, runner: BatchRunner):
        self.numeric = numeric
        self.verify_config = verify
        self.runner = runner
        logger.debug("VerificationService initialized")

    def verify(self, theorem: str, g1: Graph, g2: Graph) -> Dict[str, Any]:
        theorem = TheoremValidator.validate_theorem(theorem)
        return run_theorem(
            theorem, g1, g2,
            self.verify_config.extra_points,
            self.numeric.oracle_tolerance,
            self.numeric.jacobi_tolerance,
            self.numeric.jacobi_max_sweeps,
        )

    def verify_random(
        self, theorem: str, trials: int, max_n: int, seed: int
    ) -> Tuple[List[Dict[str, Any]], BatchStats]:
        """Seeded trials; inputs are drawn up front so results do not depend on workers.

        Charpoly theorems draw G(n, 1/2) pairs with orders up to ``max_n``;
        spectrum theorems draw from the regular corpus.
        """
        theorem = TheoremValidator.validate_theorem(theorem)
        trials = TrialsValidator.validate_trials(trials)
        rng = random.Random(seed)

        jobs = {}
        for trial in range(trials):
            if theorem in CHARPOLY_THEOREMS:
                g1, g2 = random_pair(rng, max_n)
            else:
                g1, g2 = random_regular_pair(rng, needs_positive_g1_degree(theorem))
            jobs[trial] = (
                theorem, g1, g2,
                self.verify_config.extra_points,
                self.numeric.oracle_tolerance,
                self.numeric.jacobi_tolerance,
                self.numeric.jacobi_max_sweeps,
            )

        results, stats = self.runner.run(run_theorem, jobs)
        reports = []
        for trial in range(trials):
            if trial in results:
                reports.append({"trial": trial, **results[trial]})
            else:
                reports.append({"trial": trial, "passed": False, "error": stats.errors[str(trial)]})
        failed = sum(not r["passed"] for r in reports)
        logger.info(f"{theorem}: {trials - failed}/{trials} trials passed (seed={seed})")
        return reports, stats
