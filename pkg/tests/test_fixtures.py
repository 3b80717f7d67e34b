"""
Tests for the named fixture graphs and their known Hamilton-cycle counts.
"""

from collections import Counter

import networkx as nx
import pytest

from cubic_hc.exceptions import UnknownFixtureError
from cubic_hc.graphs import (
    BASE38_HANDLES,
    base38,
    fixture,
    fixture_names,
    girth,
    is_cyclically_k_edge_connected,
    validate_four_cycle,
)
from cubic_hc.hc import classify_edges, count_hamilton_cycles


def face_sizes(graph):
    is_planar, embedding = nx.check_planarity(graph.to_networkx())
    assert is_planar
    visited = set()
    sizes = []
    for v, w in embedding.edges():
        if (v, w) not in visited:
            sizes.append(len(embedding.traverse_face(v, w, mark_half_edges=visited)))
    return Counter(sizes)


def test_fixture_names():
    assert fixture_names() == ("base38", "cc5_64_a", "cc5_64_b", "fullerene56")


def test_unknown_fixture():
    with pytest.raises(UnknownFixtureError) as exc:
        fixture("fullerene60")
    assert "base38" in exc.value.message


class TestBase38:
    def test_shape(self):
        g = fixture("base38")
        assert g == base38()
        assert (g.n, g.m) == (38, 57)
        assert g.is_cubic()
        assert girth(g) == 4
        assert nx.check_planarity(g.to_networkx())[0]

    def test_cyclic_connectivity(self):
        g = base38()
        assert is_cyclically_k_edge_connected(g, 4)
        assert not is_cyclically_k_edge_connected(g, 5)

    def test_four_hamilton_cycles(self):
        result = count_hamilton_cycles(base38(), per_edge=True)
        assert result.total == 4
        usage = classify_edges(result)
        assert len(usage.always) == 30
        assert len(usage.never) == 11
        assert len(usage.sometimes) == 16
        assert all(hits % 2 == 0 for hits in result.per_edge.values())

    def test_handles_use_forced_edges(self):
        g = base38()
        per_edge = count_hamilton_cycles(g, per_edge=True).per_edge
        for handle in BASE38_HANDLES:
            validate_four_cycle(g, handle)
            for a, b in [(handle.v1, handle.v2), (handle.v3, handle.v4)]:
                assert per_edge[(min(a, b), max(a, b))] == 4


@pytest.mark.parametrize("name,n", [("cc5_64_a", 64), ("cc5_64_b", 64), ("fullerene56", 56)])
def test_data_fixtures_are_cubic_planar(name, n):
    g = fixture(name)
    assert g.n == n
    assert g.m == 3 * n // 2
    assert g.is_cubic()
    assert nx.check_planarity(g.to_networkx())[0]


def test_fullerene_faces():
    assert face_sizes(fixture("fullerene56")) == Counter({5: 12, 6: 18})


@pytest.mark.slow
@pytest.mark.parametrize("name", ["cc5_64_a", "cc5_64_b"])
def test_cc5_64_counts(name):
    g = fixture(name)
    assert is_cyclically_k_edge_connected(g, 5)
    assert count_hamilton_cycles(g).total == 16


@pytest.mark.slow
def test_fullerene56_count():
    assert count_hamilton_cycles(fixture("fullerene56")).total == 1746


@pytest.mark.parametrize(
    "name,total", [("cc5_64_a", 16), ("cc5_64_b", 16), ("fullerene56", 1746)]
)
def test_data_fixture_per_edge_counts_are_even(name, total):
    result = count_hamilton_cycles(fixture(name), per_edge=True)
    assert result.total == total
    assert all(hits % 2 == 0 for hits in result.per_edge.values())
    assert sum(result.per_edge.values()) == result.total * fixture(name).n
