"""
Transfer System - Transfer steps between terminal partitions and the assembled
matrix M with start and finish vectors.

The number of Type-2c Hamilton cycles of N(w, k) is v_s^T M^k v_f.
"""

import logging
from collections import Counter
from functools import lru_cache
from typing import Callable, Dict, Hashable, List, Optional, Tuple

from networkx.utils import UnionFind

from ..exceptions import BadParametersError, WidthMismatchError
from ..models import PathEnd, TerminalPartition, Tile, TileKind, TransferSystem
from .linalg import dot, mat_pow, vec_mat
from .partitions import noncrossing_pair_partitions, rotation_orbits
from .tiles import MAX_TILE_WIDTH, end_tiles, tiles_by_left_terminals

logger = logging.getLogger(__name__)


def _node(end: PathEnd) -> Tuple[str, int]:
    return (end.side.value, end.position)


def _left(position: int) -> Tuple[str, int]:
    return ("left", position)


def transfer_step(w: int, pi: TerminalPartition, t: Tile) -> Optional[TerminalPartition]:
    """Terminal partition after appending internal tile ``t`` to a state ``pi``.

    Returns None when ``t`` does not attach to ``pi`` or closes a cycle.

    Raises:
        WidthMismatchError: ``t`` is not an internal tile of width ``w`` with
            as many pairs as ``pi``.
    """
    if t.kind is not TileKind.INTERNAL:
        raise WidthMismatchError("transfer_step needs an internal tile")
    if pi.width != w or t.width != w:
        raise WidthMismatchError(f"width {w} vs partition {pi.width} vs tile {t.width}")
    if t.c != pi.c:
        raise WidthMismatchError(f"tile has {t.c} pairs, partition has {pi.c}")
    if t.left_terminals != pi.support():
        return None

    uf = UnionFind()
    for a, b in pi.pairs:
        uf.union(_left(a), _left(b))
    for a, b in t.paths:
        x, y = _node(a), _node(b)
        if uf[x] == uf[y]:
            return None
        uf.union(x, y)

    groups: Dict[Hashable, List[int]] = {}
    for position in sorted(t.right_terminals):
        groups.setdefault(uf[("right", position)], []).append(position)
    return TerminalPartition(width=w, pairs=tuple((g[0], g[1]) for g in groups.values()))


def completes(pi: TerminalPartition, t: Tile) -> bool:
    """True if end tile ``t`` closes the paths of ``pi`` into exactly one cycle."""
    if t.kind is not TileKind.END or t.width != pi.width:
        raise WidthMismatchError("completes needs an end tile of the partition's width")
    if t.right_terminals != pi.support():
        return False
    uf = UnionFind()
    for a, b in pi.pairs:
        uf.union(_left(a), _left(b))
    closures = 0
    for a, b in t.paths:
        x, y = _left(a.position), _left(b.position)
        if uf[x] == uf[y]:
            closures += 1
        else:
            uf.union(x, y)
    return closures == 1


def transfer_counts(
    w: int, pi: TerminalPartition, max_width: int = MAX_TILE_WIDTH
) -> Counter:
    """Multiset of partitions reached from ``pi`` through one internal layer."""
    reached: Counter = Counter()
    for tile in tiles_by_left_terminals(w, pi.c, max_width=max_width).get(pi.support(), []):
        result = transfer_step(w, pi, tile)
        if result is not None:
            reached[result] += 1
    return reached


@lru_cache(maxsize=None)
def build_transfer_system(
    w: int, c: int, reduced: bool = True, max_width: int = MAX_TILE_WIDTH
) -> TransferSystem:
    """Assemble M, v_s and v_f for Type-2c cycles of width-``w`` nanotubes.

    With ``reduced`` rows are rotation orbits (ordered by representative);
    otherwise every non-crossing partition gets its own row.
    """
    starts = end_tiles(w, c, max_width=max_width)
    parts = noncrossing_pair_partitions(w, c)

    row_of: Callable[[TerminalPartition], int]
    if reduced:
        orbits = rotation_orbits(w, parts)
        index = tuple(o.representative for o in orbits)
        orbit_row = {member: i for i, o in enumerate(orbits) for member in o.members}
        row_of = orbit_row.__getitem__
    else:
        index = tuple(parts)
        part_row = {p: i for i, p in enumerate(index)}
        row_of = part_row.__getitem__

    size = len(index)
    matrix = [[0] * size for _ in range(size)]
    for i, pi in enumerate(index):
        for result, hits in transfer_counts(w, pi, max_width=max_width).items():
            matrix[i][row_of(result)] += hits

    v_s = [0] * size
    for tile in starts:
        v_s[row_of(tile.induced_partition())] += 1
    v_f = [sum(1 for tile in starts if completes(pi, tile)) for pi in index]

    logger.info(
        f"🔧 Built {'reduced' if reduced else 'full'} transfer system w={w} c={c}: {size}x{size}"
    )
    return TransferSystem(
        width=w,
        pairs=c,
        reduced=reduced,
        index=index,
        matrix=tuple(tuple(row) for row in matrix),
        v_s=tuple(v_s),
        v_f=tuple(v_f),
    )


def typed_counts(system: TransferSystem, k_max: int) -> List[int]:
    """v_s^T M^k v_f for k = 0..k_max, one layer at a time."""
    row = list(system.v_s)
    counts = []
    for _ in range(k_max + 1):
        counts.append(dot(row, system.v_f))
        row = vec_mat(row, system.matrix)
    return counts


def typed_count(
    w: int, c: int, k: int, reduced: bool = True, max_width: int = MAX_TILE_WIDTH
) -> int:
    """Number of Type-2c Hamilton cycles of N(w, k), by repeated squaring of M."""
    if k < 0:
        raise BadParametersError(f"k must be non-negative, got {k}")
    system = build_transfer_system(w, c, reduced=reduced, max_width=max_width)
    power = mat_pow(system.matrix, k)
    return dot(vec_mat(system.v_s, power), system.v_f)


def total_nanotube_count(w: int, k: int, max_width: int = MAX_TILE_WIDTH) -> int:
    """Hamilton cycles of N(w, k), summed over every type 2 <= 2c <= w."""
    return sum(typed_count(w, c, k, max_width=max_width) for c in range(1, w // 2 + 1))
