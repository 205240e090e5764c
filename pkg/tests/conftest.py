"""
Pytest configuration and shared fixtures.

Provides:
- Named graphs used across the suite (F, H, small families)
- Regular graph corpus for closed-form checks
- Seeded random number generators and a 300-graph random sample
- A container wired to a temporary search cache

Usage:
    pytest tests/ -v
    pytest tests/ -v -m "not slow"
"""

import random

import pytest

from spectrajoin.config import AppConfig, SearchConfig
from spectrajoin.container import create_container
from spectrajoin.graphs.spec_parser import parse_graph_spec
from spectrajoin.lab.search import regular_graph_classes


# ========================================
# GRAPH FIXTURES
# ========================================

@pytest.fixture
def graph():
    """Parse a graph spec: ``graph("C4+K1")``."""
    return parse_graph_spec


@pytest.fixture
def f_graph():
    """Quadrangle plus an isolated vertex."""
    return parse_graph_spec("C4+K1")


@pytest.fixture
def h_graph():
    """The star K1,4, A-cospectral with F."""
    return parse_graph_spec("K1,4")


REGULAR_SPECS = ["K2", "K3", "K4", "C4", "C5", "C6", "K2,2"]


@pytest.fixture(params=REGULAR_SPECS)
def regular_graph(request):
    """Each graph of the small regular corpus in turn."""
    return parse_graph_spec(request.param)


@pytest.fixture
def rng():
    """Seeded random generator."""
    return random.Random(20240601)


# ========================================
# COSPECTRAL PAIR FIXTURES
# ========================================

@pytest.fixture(scope="session")
def cubic_classes_on_eight():
    """All 3-regular graphs on eight vertices, one per isomorphism class."""
    return regular_graph_classes(8, 3)


@pytest.fixture(scope="session")
def regular_cospectral_pair():
    """First non-isomorphic A-cospectral regular pair on ten vertices."""
    from spectrajoin.lab.search import find_regular_cospectral_pairs

    for r in (3, 4, 5):
        result = find_regular_cospectral_pairs(10, r)
        if result.pairs:
            return result.pair_graphs()[0]
    pytest.fail("no cospectral regular pair on ten vertices")


# ========================================
# RANDOM SAMPLE FIXTURES
# ========================================

@pytest.fixture(scope="session")
def random_graph_sample():
    """300 seeded graphs on 1..12 vertices: mostly G(n, p), about a fifth regular."""
    from spectrajoin.lab.search import seed_regular_graph
    from spectrajoin.lab.theorems import random_graph

    rng = random.Random(20240615)
    sample = []
    while len(sample) < 300:
        n = rng.randint(1, 12)
        if rng.random() < 0.2:
            seed = seed_regular_graph(n, rng.randint(0, n - 1))
            if seed is None:
                continue
            mapping = list(range(n))
            rng.shuffle(mapping)
            sample.append(seed.relabel(mapping))
        else:
            sample.append(random_graph(rng, n, rng.uniform(0.1, 0.9)))
    return sample


# ========================================
# CONTAINER FIXTURES
# ========================================

@pytest.fixture
def app_config(tmp_path):
    """Configuration with the search cache in a temporary directory."""
    return AppConfig(search=SearchConfig(cache_dir=str(tmp_path / "cache"), max_workers=1))


@pytest.fixture
def container(app_config):
    """Container built from the temporary configuration."""
    return create_container(app_config)


def pytest_configure(config):
    """Register custom markers."""
    config.addinivalue_line("markers", "slow: ten-vertex enumeration (minutes on first run)")
