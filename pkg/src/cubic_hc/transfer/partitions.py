"""
Terminal Partitions - Enumeration of non-crossing pairings and their rotation orbits.
"""

import logging
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

from ..exceptions import BadParametersError, NotRotationClosedError
from ..models import Orbit, Pair, TerminalPartition

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def _pairings(lo: int, hi: int, c: int) -> Tuple[Tuple[Pair, ...], ...]:
    """Non-crossing sets of ``c`` pairs inside the interval [lo, hi)."""
    if c == 0:
        return ((),)
    if hi - lo < 2 * c:
        return ()
    found: List[Tuple[Pair, ...]] = list(_pairings(lo + 1, hi, c))
    # lo paired with j splits the rest into (lo, j) and (j, hi)
    for j in range(lo + 1, hi):
        for inner_c in range(c):
            for inner in _pairings(lo + 1, j, inner_c):
                for outer in _pairings(j + 1, hi, c - 1 - inner_c):
                    found.append(((lo, j),) + inner + outer)
    return tuple(found)


def noncrossing_pair_partitions(w: int, c: int) -> List[TerminalPartition]:
    """All non-crossing partitions of 0..w-1 with exactly ``c`` pairs, sorted by encoding."""
    if c < 1 or 2 * c > w:
        raise BadParametersError(f"Need 1 <= 2c <= w, got w={w}, c={c}")
    encodings = sorted(set(_pairings(0, w, c)))
    return [TerminalPartition(width=w, pairs=pairs) for pairs in encodings]


def rotation_orbits(w: int, parts: Sequence[TerminalPartition]) -> List[Orbit]:
    """Group ``parts`` into orbits of the rotation i -> i+1 (mod w).

    Orbits are returned sorted by representative, the lexicographically least
    member.

    Raises:
        NotRotationClosedError: a rotation of some partition is not in ``parts``.
    """
    family = set(parts)
    assigned: Dict[TerminalPartition, int] = {}
    orbits: List[Orbit] = []
    for part in sorted(family, key=lambda p: p.pairs):
        if part in assigned:
            continue
        members = {part.rotate(s) for s in range(w)}
        missing = members - family
        if missing:
            raise NotRotationClosedError(min(missing, key=lambda p: p.pairs).label())
        ordered = tuple(sorted(members, key=lambda p: p.pairs))
        for member in ordered:
            assigned[member] = len(orbits)
        orbits.append(Orbit(representative=ordered[0], members=ordered))
    logger.debug(f"{len(family)} partitions of width {w} fall into {len(orbits)} orbits")
    return orbits
