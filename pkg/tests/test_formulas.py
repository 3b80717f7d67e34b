"""
Tests for the closed-form Hamilton-cycle counts.
"""

import pytest

from cubic_hc.exceptions import BadParametersError
from cubic_hc.formulas import FibCache, n5_count, rl_count, schwenk_count
from cubic_hc.graphs import generalized_petersen, nanotube, ring_of_ladders
from cubic_hc.hc import count_hamilton_cycles


def test_fibonacci():
    fib = FibCache()
    assert [fib(i) for i in range(1, 11)] == [1, 1, 2, 3, 5, 8, 13, 21, 34, 55]
    with pytest.raises(BadParametersError):
        fib(-1)


@pytest.mark.parametrize(
    "m,expected", [(10, 30), (12, 34), (14, 56), (16, 108), (18, 150), (32, 4412)]
)
def test_schwenk_values(m, expected):
    assert schwenk_count(m) == expected


@pytest.mark.parametrize("m", [8, 11, 15])
def test_schwenk_domain(m):
    with pytest.raises(BadParametersError):
        schwenk_count(m)


@pytest.mark.parametrize("m", [10, 12, 14, 16, 18, 20])
def test_schwenk_matches_search(m):
    assert count_hamilton_cycles(generalized_petersen(m, 2)).total == schwenk_count(m)


@pytest.mark.parametrize("m,k,expected", [(2, 2, 6), (3, 3, 20), (5, 4, 542)])
def test_rl_values(m, k, expected):
    assert rl_count(m, k) == expected


RL_GRID = [(m, k) for m in range(2, 11) for k in range(2, 11) if 2 * m * k <= 40]


@pytest.mark.parametrize("m,k", RL_GRID)
def test_rl_matches_search(m, k):
    assert count_hamilton_cycles(ring_of_ladders(m, k)).total == rl_count(m, k)


def test_rl_domain():
    with pytest.raises(BadParametersError):
        rl_count(1, 4)


@pytest.mark.parametrize("k,expected", [(1, 30), (2, 20), (3, 280), (4, 80), (5, 3040)])
def test_n5_values(k, expected):
    assert n5_count(k) == expected


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_n5_matches_search(k):
    assert count_hamilton_cycles(nanotube(5, k).graph).total == n5_count(k)


def test_n5_domain():
    with pytest.raises(BadParametersError):
        n5_count(0)


@pytest.mark.parametrize("t", range(2, 21))
def test_nanotube_overtakes_petersen(t):
    assert n5_count(2 * t - 1) > schwenk_count(10 * t)


def test_smallest_members_tie():
    assert n5_count(1) == schwenk_count(10) == 30


def test_growth_prefactors():
    golden = (1 + 5**0.5) / 2
    t = 20
    assert n5_count(2 * t - 1) / 12**t == pytest.approx(5 / 3, rel=1e-6)
    assert schwenk_count(10 * t) / golden ** (5 * t) == pytest.approx(2, rel=1e-6)


def test_rl_5_4_by_search():
    assert count_hamilton_cycles(ring_of_ladders(5, 4)).total == 542
