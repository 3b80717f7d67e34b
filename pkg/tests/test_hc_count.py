"""
Tests for the Hamilton-cycle counter, its naive cross-check and crossing-type buckets.
"""

import pytest

from cubic_hc.exceptions import BadParametersError, SearchTimeoutError, ValidationError
from cubic_hc.graphs import build_graph, generalized_petersen, nanotube, ring_of_ladders
from cubic_hc.hc import (
    classify_edges,
    count_by_crossing_type,
    count_hamilton_cycles,
    count_hamilton_cycles_naive,
    enumerate_hamilton_cycles,
    is_hamiltonian,
)
from cubic_hc.models import HamiltonCount


class TestCount:
    def test_k4(self, k4):
        result = count_hamilton_cycles(k4)
        assert result.total == 3
        assert result.per_edge is None
        assert result.nodes > 0

    def test_cube(self, cube):
        assert count_hamilton_cycles(cube).total == 6

    def test_petersen_is_not_hamiltonian(self, petersen):
        assert count_hamilton_cycles(petersen).total == 0
        assert not is_hamiltonian(petersen)

    def test_dodecahedron(self, dodecahedron):
        assert count_hamilton_cycles(dodecahedron).total == 30
        assert is_hamiltonian(dodecahedron)

    def test_forest_and_tiny_graphs(self):
        assert count_hamilton_cycles(build_graph(3, [(0, 1), (1, 2)])).total == 0
        assert count_hamilton_cycles(build_graph(3, [(0, 1), (1, 2), (0, 2)])).total == 1
        assert count_hamilton_cycles(build_graph(0, [])).total == 0

    def test_disconnected_graph(self, k4):
        two = build_graph(8, list(k4.edges) + [(u + 4, v + 4) for u, v in k4.edges])
        assert count_hamilton_cycles(two).total == 0

    def test_per_edge_tallies(self):
        g = generalized_petersen(12, 2)
        result = count_hamilton_cycles(g, per_edge=True)
        assert result.total == 34
        assert sum(result.per_edge.values()) == g.n * result.total
        for v in range(g.n):
            through = sum(result.per_edge[(min(v, x), max(v, x))] for x in g.adjacency[v])
            assert through == 2 * result.total

    def test_enumerate_cycles(self, cube):
        cycles = []
        result = enumerate_hamilton_cycles(cube, cycles.append)
        assert result.total == len(cycles) == 6
        assert len(set(cycles)) == 6
        assert all(len(cycle) == cube.n for cycle in cycles)

    def test_timeout(self):
        g = nanotube(6, 5).graph
        with pytest.raises(SearchTimeoutError) as exc:
            count_hamilton_cycles(g, budget=1e-9)
        assert exc.value.partial_total >= 0
        assert exc.value.error_code == "TIMEOUT"


SMALL_GRAPHS = [
    ("cube", lambda: generalized_petersen(4, 1)),
    ("prism5", lambda: generalized_petersen(5, 1)),
    ("prism6", lambda: generalized_petersen(6, 1)),
    ("petersen", lambda: generalized_petersen(5, 2)),
    ("rl_3_2", lambda: ring_of_ladders(3, 2)),
    ("n_3_1", lambda: nanotube(3, 1).graph),
]


@pytest.mark.parametrize("name,make", SMALL_GRAPHS)
def test_naive_oracle_agrees(name, make):
    g = make()
    assert count_hamilton_cycles(g).total == count_hamilton_cycles_naive(g)


def test_naive_oracle_rejects_tiny_graphs():
    with pytest.raises(BadParametersError):
        count_hamilton_cycles_naive(build_graph(2, [(0, 1)]))


FAMILY_INSTANCES = [
    ("p_12_2", lambda: generalized_petersen(12, 2)),
    ("p_18_2", lambda: generalized_petersen(18, 2)),
    ("p_9_1", lambda: generalized_petersen(9, 1)),
    ("rl_3_3", lambda: ring_of_ladders(3, 3)),
    ("rl_5_2", lambda: ring_of_ladders(5, 2)),
    ("n_5_3", lambda: nanotube(5, 3).graph),
    ("n_6_2", lambda: nanotube(6, 2).graph),
]


@pytest.mark.parametrize("name,make", SMALL_GRAPHS + FAMILY_INSTANCES)
def test_per_edge_counts_are_even(name, make):
    result = count_hamilton_cycles(make(), per_edge=True)
    assert all(count % 2 == 0 for count in result.per_edge.values())
    assert result.total == 0 or result.total >= 3


class TestCrossingTypes:
    def test_n_5_1(self):
        assert count_by_crossing_type(nanotube(5, 1)) == {2: 10, 4: 20}

    def test_n_5_2(self):
        assert count_by_crossing_type(nanotube(5, 2)) == {2: 20}

    def test_n_5_3(self):
        assert count_by_crossing_type(nanotube(5, 3)) == {2: 40, 4: 240}

    @pytest.mark.slow
    def test_n_6_4(self):
        buckets = count_by_crossing_type(nanotube(6, 4))
        assert buckets[4] == 1104
        assert sum(buckets.values()) == 1232


class TestClassifyEdges:
    def test_cube(self, cube):
        usage = classify_edges(count_hamilton_cycles(cube, per_edge=True))
        assert len(usage.always) + len(usage.never) + len(usage.sometimes) == cube.m
        assert usage.always == ()

    def test_needs_tallies(self, cube):
        with pytest.raises(ValidationError):
            classify_edges(HamiltonCount(total=6))
