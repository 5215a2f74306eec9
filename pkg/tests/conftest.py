"""
Fixtures partagées : graphes des familles usuelles et pool de référence.
"""

import sys
from pathlib import Path

import pytest

# Racine du dépôt sur le path pour les imports `core`, `config`, ...
sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from core.graph import complete_graph, cycle_graph, path_graph, standard_pool, star_graph  # noqa: E402
from core.sources import load_named_graph  # noqa: E402


@pytest.fixture
def c3():
    return cycle_graph(3)


@pytest.fixture
def c4():
    return cycle_graph(4)


@pytest.fixture
def k4():
    return complete_graph(4)


@pytest.fixture
def k5():
    return complete_graph(5)


@pytest.fixture
def s5():
    return star_graph(5)


@pytest.fixture
def p5():
    return path_graph(5)


@pytest.fixture
def petersen():
    return load_named_graph('petersen')


@pytest.fixture(scope="session")
def pool():
    return standard_pool()
