"""Shared graphs for the cubic-hc test suite."""

import pytest

from cubic_hc.graphs import build_graph, generalized_petersen
from cubic_hc.models import Graph


@pytest.fixture
def k4() -> Graph:
    return build_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


@pytest.fixture
def cube() -> Graph:
    return generalized_petersen(4, 1)


@pytest.fixture
def petersen() -> Graph:
    return generalized_petersen(5, 2)


@pytest.fixture
def dodecahedron() -> Graph:
    return generalized_petersen(10, 2)
