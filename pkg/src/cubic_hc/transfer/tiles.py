"""
Layer Tiles - Spanning subgraphs of a layer cycle with every vertex of degree 1 or 2.

Layer cycles are walked as cv_0..cv_{L-1} with edge ``i`` joining cv_i and
cv_{i+1}. On an internal layer (L = 2w) cv_{2j} is w_j and cv_{2j+1} is v_j,
so edge 2j is v_j w_j and edge 2j+1 is v_j w_{j+1}. On an end layer (L = w)
cv_j is the vertex at spoke position j.
"""

import logging
from functools import lru_cache
from typing import Dict, List, Tuple

from ..exceptions import BadParametersError, WidthTooLargeError
from ..models import PathEnd, Side, Tile, TileKind

logger = logging.getLogger(__name__)

MAX_TILE_WIDTH = 13


def _terminal(kind: TileKind, p: int) -> PathEnd:
    if kind is TileKind.END:
        return PathEnd(side=Side.RIGHT, position=p)
    side = Side.LEFT if p % 2 else Side.RIGHT
    return PathEnd(side=side, position=p // 2)


@lru_cache(maxsize=None)
def _all_tiles(kind: TileKind, w: int) -> Tuple[Tile, ...]:
    size = 2 * w if kind is TileKind.INTERNAL else w
    full = (1 << size) - 1
    tiles: List[Tile] = []
    # the full cycle (no terminals) is never a tile
    for mask in range(full):
        missing = full ^ mask
        before = ((missing << 1) | (missing >> (size - 1))) & full
        if missing & before:
            continue  # some vertex lost both of its edges
        gaps = [i for i in range(size) if missing >> i & 1]
        paths = []
        for idx, gap in enumerate(gaps):
            nxt = gaps[(idx + 1) % len(gaps)]
            paths.append((_terminal(kind, (gap + 1) % size), _terminal(kind, nxt)))
        ends = [end for path in paths for end in path]
        tiles.append(
            Tile(
                kind=kind,
                width=w,
                edges=tuple(i for i in range(size) if mask >> i & 1),
                left_terminals=frozenset(e.position for e in ends if e.side is Side.LEFT),
                right_terminals=frozenset(e.position for e in ends if e.side is Side.RIGHT),
                paths=tuple(paths),
            )
        )
    logger.debug(f"Enumerated {len(tiles)} {kind.value} tiles of width {w}")
    return tuple(tiles)


def _check(w: int, c: int, max_width: int) -> None:
    if w > max_width:
        raise WidthTooLargeError(w, max_width)
    if w < 3 or c < 1 or 2 * c > w:
        raise BadParametersError(f"Tiles need w >= 3 and 1 <= 2c <= w, got w={w}, c={c}")


def internal_tiles(w: int, c: int, max_width: int = MAX_TILE_WIDTH) -> List[Tile]:
    """Internal tiles with 2c terminals on each side."""
    _check(w, c, max_width)
    return [
        t
        for t in _all_tiles(TileKind.INTERNAL, w)
        if len(t.left_terminals) == 2 * c and len(t.right_terminals) == 2 * c
    ]


def end_tiles(w: int, c: int, max_width: int = MAX_TILE_WIDTH) -> List[Tile]:
    """End tiles with exactly 2c terminals."""
    _check(w, c, max_width)
    return [t for t in _all_tiles(TileKind.END, w) if len(t.right_terminals) == 2 * c]


def tiles_by_left_terminals(
    w: int, c: int, max_width: int = MAX_TILE_WIDTH
) -> Dict[frozenset, List[Tile]]:
    """Internal tiles grouped by the set of left terminal positions."""
    grouped: Dict[frozenset, List[Tile]] = {}
    for tile in internal_tiles(w, c, max_width=max_width):
        grouped.setdefault(tile.left_terminals, []).append(tile)
    return grouped
