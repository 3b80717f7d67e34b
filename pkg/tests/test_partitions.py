"""
Tests for terminal partitions, their notation and rotation orbits.
"""

from math import comb

import pydantic
import pytest

from cubic_hc.exceptions import BadParametersError, NotRotationClosedError
from cubic_hc.models import TerminalPartition
from cubic_hc.models.transfer import pairs_cross
from cubic_hc.transfer import noncrossing_pair_partitions, rotation_orbits

CATALAN = [1, 1, 2, 5, 14, 42]


def part(label: str, width: int) -> TerminalPartition:
    return TerminalPartition.from_label(label, width)


class TestTerminalPartition:
    def test_pairs_are_normalized(self):
        p = TerminalPartition(width=5, pairs=[(4, 0), (3, 1)])
        assert p.pairs == ((0, 4), (1, 3))
        assert p.c == 2
        assert p.support() == frozenset({0, 1, 3, 4})

    def test_label(self):
        assert part("{04|13|2}", 5).pairs == ((0, 4), (1, 3))
        assert TerminalPartition(width=5, pairs=((0, 4), (1, 3))).label() == "{04|13|2}"
        assert str(part("{0|1|23|45}", 6)) == "{0|1|23|45}"

    def test_wide_label(self):
        p = TerminalPartition(width=12, pairs=((0, 11), (1, 2)))
        assert p.label() == "{0,11|1,2|3|4|5|6|7|8|9|10}"
        assert TerminalPartition.from_label(p.label(), 12) == p

    def test_crossing_pairs_rejected(self):
        assert pairs_cross((0, 2), (1, 3))
        assert not pairs_cross((0, 3), (1, 2))
        with pytest.raises(pydantic.ValidationError):
            TerminalPartition(width=4, pairs=((0, 2), (1, 3)))

    def test_overlap_and_range_rejected(self):
        with pytest.raises(pydantic.ValidationError):
            TerminalPartition(width=4, pairs=((0, 1), (1, 2)))
        with pytest.raises(pydantic.ValidationError):
            TerminalPartition(width=4, pairs=((0, 4),))

    def test_rotate_and_canonical(self):
        p = part("{04|13|2}", 5)
        assert p.rotate(1) == part("{01|24|3}", 5)
        assert p.canonical() == part("{01|24|3}", 5)
        assert p.rotate(5) == p


class TestEnumeration:
    @pytest.mark.parametrize("w,c", [(4, 1), (4, 2), (5, 2), (6, 2), (6, 3), (7, 3), (9, 4)])
    def test_counts(self, w, c):
        parts = noncrossing_pair_partitions(w, c)
        assert len(parts) == comb(w, 2 * c) * CATALAN[c]
        assert len(set(parts)) == len(parts)
        assert [p.pairs for p in parts] == sorted(p.pairs for p in parts)

    def test_bad_c(self):
        with pytest.raises(BadParametersError):
            noncrossing_pair_partitions(5, 3)
        with pytest.raises(BadParametersError):
            noncrossing_pair_partitions(5, 0)


class TestOrbits:
    def test_width_5(self):
        orbits = rotation_orbits(5, noncrossing_pair_partitions(5, 2))
        assert [o.representative.pairs for o in orbits] == [((0, 1), (2, 3)), ((0, 1), (2, 4))]
        assert [o.size for o in orbits] == [5, 5]

    def test_width_6(self):
        orbits = rotation_orbits(6, noncrossing_pair_partitions(6, 2))
        assert len(orbits) == 6
        assert sorted(o.size for o in orbits) == [3, 3, 6, 6, 6, 6]
        members = [m for o in orbits for m in o.members]
        assert len(members) == len(set(members)) == 30

    def test_not_closed(self):
        with pytest.raises(NotRotationClosedError):
            rotation_orbits(5, [TerminalPartition(width=5, pairs=((0, 1),))])
