"""
Tests for transfer steps, assembled transfer systems and typed nanotube counts.
"""

from collections import Counter

import pytest

from cubic_hc.exceptions import BadParametersError, WidthMismatchError
from cubic_hc.formulas import n5_count
from cubic_hc.graphs import nanotube
from cubic_hc.hc import count_by_crossing_type, count_hamilton_cycles
from cubic_hc.models import Side, TerminalPartition
from cubic_hc.transfer import (
    build_transfer_system,
    completes,
    end_tiles,
    internal_tiles,
    mat_mul,
    mat_pow,
    total_nanotube_count,
    transfer_counts,
    transfer_step,
    typed_count,
    typed_counts,
)


def part(label: str, width: int) -> TerminalPartition:
    return TerminalPartition.from_label(label, width)


def multiset(labels, width):
    return Counter(part(label, width) for label in labels)


class TestTransferStep:
    def test_width_5_from_nested_pairs(self):
        reached = transfer_counts(5, part("{04|13|2}", 5))
        assert reached == multiset(["{01|2|34}", "{04|12|3}", "{04|1|23}", "{01|23|4}"], 5)

    def test_width_5_from_adjacent_pairs(self):
        reached = transfer_counts(5, part("{01|2|34}", 5))
        assert reached == multiset(["{04|13|2}", "{0|14|23}", "{01|24|3}"], 5)

    def test_width_6(self):
        reached = transfer_counts(6, part("{0|1|23|45}", 6))
        assert reached == multiset(["{03|1|2|45}", "{02|1|35|4}", "{0|1|25|34}"], 6)

    def test_single_pair_has_two_successors(self):
        for j in range(5):
            pi = TerminalPartition(width=5, pairs=((j, (j + 1) % 5),))
            assert sum(transfer_counts(5, pi).values()) == 2

    def test_incompatible_tile(self):
        pi = part("{01|2|34}", 5)
        misfits = [t for t in internal_tiles(5, 2) if t.left_terminals != pi.support()]
        assert misfits
        assert all(transfer_step(5, pi, t) is None for t in misfits)

    def test_tile_joining_a_pair_is_rejected(self):
        pi = part("{01|2|34}", 5)
        pairs = {frozenset(p) for p in pi.pairs}

        def joins_pair(t):
            return any(
                a.side is Side.LEFT
                and b.side is Side.LEFT
                and frozenset((a.position, b.position)) in pairs
                for a, b in t.paths
            )

        closing = [
            t
            for t in internal_tiles(5, 2)
            if t.left_terminals == pi.support() and joins_pair(t)
        ]
        assert closing
        assert all(transfer_step(5, pi, t) is None for t in closing)

    def test_mismatches(self):
        pi = part("{01|2|34}", 5)
        with pytest.raises(WidthMismatchError):
            transfer_step(5, pi, internal_tiles(6, 2)[0])
        with pytest.raises(WidthMismatchError):
            transfer_step(5, pi, internal_tiles(5, 1)[0])
        with pytest.raises(WidthMismatchError):
            transfer_step(5, pi, end_tiles(5, 2)[0])


class TestCompletion:
    def test_width_5_finish_vector(self):
        tiles = end_tiles(5, 2)
        assert sum(completes(part("{01|23|4}", 5), t) for t in tiles) == 1
        assert sum(completes(part("{01|24|3}", 5), t) for t in tiles) == 0

    def test_needs_end_tile(self):
        with pytest.raises(WidthMismatchError):
            completes(part("{01|23|4}", 5), internal_tiles(5, 2)[0])


class TestTransferSystem:
    def test_width_5_type_4(self):
        system = build_transfer_system(5, 2)
        assert [p.label() for p in system.index] == ["{01|23|4}", "{01|24|3}"]
        assert system.matrix == ((0, 3), (4, 0))
        assert system.v_s == (0, 5)
        assert system.v_f == (1, 0)
        assert system.size == 2
        assert system.orbit_of(part("{04|13|2}", 5)) == 1

    def test_width_6_type_4(self):
        system = build_transfer_system(6, 2)
        reps = ["{0|1|23|45}", "{0|1|25|34}", "{0|13|2|45}", "{0|15|2|34}", "{0|12|3|45}",
                "{0|15|24|3}"]
        rows = [system.orbit_of(part(label, 6)) for label in reps]
        assert sorted(rows) == list(range(6))
        expected = [
            [0, 2, 0, 0, 0, 1],
            [2, 0, 1, 1, 0, 0],
            [1, 0, 1, 2, 1, 0],
            [1, 0, 2, 1, 1, 0],
            [0, 2, 0, 0, 0, 2],
            [0, 0, 2, 2, 2, 0],
        ]
        for i, row in enumerate(expected):
            assert [system.matrix[rows[i]][rows[j]] for j in range(6)] == row
        assert [system.v_s[r] for r in rows] == [0, 6, 0, 0, 0, 3]
        assert [system.v_f[r] for r in rows] == [1, 0, 0, 0, 1, 0]

    @pytest.mark.parametrize("w", [4, 5, 6, 7])
    def test_reduced_matches_full(self, w):
        for c in range(1, w // 2 + 1):
            reduced = typed_counts(build_transfer_system(w, c), 8)
            full = typed_counts(build_transfer_system(w, c, reduced=False), 8)
            assert reduced == full

    def test_full_system_rows(self):
        system = build_transfer_system(5, 2, reduced=False)
        assert system.size == 10
        assert not system.reduced
        pi = part("{04|13|2}", 5)
        assert system.orbit_of(pi) == system.index.index(pi)


class TestTypedCounts:
    def test_width_5(self):
        for k in range(1, 12):
            assert typed_count(5, 1, k) == 5 * 2**k
            assert typed_count(5, 2, k) == (20 * 12 ** ((k - 1) // 2) if k % 2 else 0)

    def test_squaring_matches_layer_by_layer(self):
        system = build_transfer_system(6, 2)
        assert typed_counts(system, 12)[1:] == [typed_count(6, 2, k) for k in range(1, 13)]

    def test_matrix_power(self):
        m = [[1, 2], [3, 4]]
        assert mat_pow(m, 0) == [[1, 0], [0, 1]]
        assert mat_pow(m, 3) == mat_mul(m, mat_mul(m, m))

    def test_width_6_length_4(self):
        assert typed_count(6, 2, 4) == 1104
        assert total_nanotube_count(6, 4) == 1232

    def test_negative_length(self):
        with pytest.raises(BadParametersError):
            typed_count(5, 2, -1)

    def test_total_matches_closed_form(self):
        for k in range(1, 51):
            assert total_nanotube_count(5, k) == n5_count(k)

    @pytest.mark.parametrize("w,k", [(3, 1), (3, 2), (4, 1), (4, 2), (5, 2), (6, 1)])
    def test_total_matches_search(self, w, k):
        assert total_nanotube_count(w, k) == count_hamilton_cycles(nanotube(w, k).graph).total

    @pytest.mark.parametrize(
        "w,k",
        [(w, k) for w in (4, 5) for k in (1, 2, 3)]
        + [(6, 1), (6, 2)]
        + [
            pytest.param(w, k, marks=pytest.mark.slow)
            for w, k in [(6, 3), (7, 1), (7, 2), (7, 3)]
        ],
    )
    def test_types_match_crossing_buckets(self, w, k):
        typed = {2 * c: typed_count(w, c, k) for c in range(1, w // 2 + 1)}
        assert count_by_crossing_type(nanotube(w, k)) == {t: v for t, v in typed.items() if v}

    @pytest.mark.slow
    @pytest.mark.parametrize("w,k", [(4, 3), (6, 2), (6, 3), (7, 1), (7, 2)])
    def test_total_matches_search_wide(self, w, k):
        assert total_nanotube_count(w, k) == count_hamilton_cycles(nanotube(w, k).graph).total
