"""
Transfer Models - Terminal partitions, layer tiles and assembled transfer systems.
"""

from enum import Enum
from typing import FrozenSet, List, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

Pair = Tuple[int, int]


def pairs_cross(p: Pair, q: Pair) -> bool:
    """True if two pairs interleave in the linear order 0..w-1."""
    (a, b), (c, d) = sorted((p, q))
    return a < c < b < d


class TerminalPartition(BaseModel):
    """Non-crossing partition of terminal positions 0..width-1 into pairs and singletons.

    Only the pairs are stored; every uncovered position is an implicit
    singleton. ``pairs`` is kept sorted so two partitions are equal exactly when
    their encodings are.
    """

    model_config = ConfigDict(frozen=True)

    width: int = Field(..., ge=1, description="Number of terminal positions")
    pairs: Tuple[Pair, ...] = Field(default_factory=tuple, description="Sorted (i, j) pairs, i < j")

    @field_validator("pairs", mode="before")
    @classmethod
    def _normalize_pairs(cls, value: object) -> Tuple[Pair, ...]:
        pairs = [tuple(sorted(p)) for p in value]  # type: ignore[attr-defined]
        return tuple(sorted(pairs))  # type: ignore[arg-type]

    @model_validator(mode="after")
    def _check_cells(self) -> "TerminalPartition":
        seen: set = set()
        for a, b in self.pairs:
            if a == b:
                raise ValueError(f"pair ({a}, {b}) repeats a position")
            if a < 0 or b >= self.width:
                raise ValueError(f"pair ({a}, {b}) outside 0..{self.width - 1}")
            if a in seen or b in seen:
                raise ValueError(f"pair ({a}, {b}) overlaps another pair")
            seen.update((a, b))
        for i, p in enumerate(self.pairs):
            for q in self.pairs[i + 1 :]:
                if pairs_cross(p, q):
                    raise ValueError(f"pairs {p} and {q} cross")
        return self

    @property
    def c(self) -> int:
        """Number of pairs (half the number of crossing edges)."""
        return len(self.pairs)

    def support(self) -> FrozenSet[int]:
        return frozenset(x for pair in self.pairs for x in pair)

    def rotate(self, shift: int = 1) -> "TerminalPartition":
        """Apply the rotation i -> i + shift (mod width)."""
        w = self.width
        return TerminalPartition(
            width=w, pairs=tuple(((a + shift) % w, (b + shift) % w) for a, b in self.pairs)
        )

    def canonical(self) -> "TerminalPartition":
        """Lexicographically least rotation."""
        return min((self.rotate(s) for s in range(self.width)), key=lambda p: p.pairs)

    def label(self) -> str:
        """Compact cell notation, e.g. ``{04|13|2}``."""
        cells: List[Tuple[int, ...]] = list(self.pairs)
        covered = self.support()
        cells.extend((i,) for i in range(self.width) if i not in covered)
        cells.sort(key=lambda cell: cell[0])
        sep = "" if self.width <= 10 else ","
        return "{" + "|".join(sep.join(str(x) for x in cell) for cell in cells) + "}"

    @classmethod
    def from_label(cls, label: str, width: int) -> "TerminalPartition":
        """Parse the compact notation produced by :meth:`label`.

        Cells of two elements become pairs; single-element cells are dropped.
        Widths above 10 need comma-separated cells such as ``{0,11|1|...}``.
        """
        body = label.strip().lstrip("{").rstrip("}")
        pairs = []
        for cell in filter(None, body.split("|")):
            items = cell.split(",") if width > 10 else list(cell)
            values = [int(x) for x in items]
            if len(values) == 2:
                pairs.append((values[0], values[1]))
            elif len(values) != 1:
                raise ValueError(f"cell '{cell}' is neither a pair nor a singleton")
        return cls(width=width, pairs=tuple(pairs))

    def __str__(self) -> str:
        return self.label()


class Orbit(BaseModel):
    """Rotation orbit of terminal partitions."""

    model_config = ConfigDict(frozen=True)

    representative: TerminalPartition
    members: Tuple[TerminalPartition, ...]

    @property
    def size(self) -> int:
        return len(self.members)


class TileKind(str, Enum):
    """Layer a tile lives on."""

    INTERNAL = "internal"
    END = "end"


class Side(str, Enum):
    """Which cut a terminal faces."""

    LEFT = "left"
    RIGHT = "right"


class PathEnd(BaseModel):
    """One endpoint of a tile path: a terminal position on a given side."""

    model_config = ConfigDict(frozen=True)

    side: Side
    position: int = Field(..., ge=0)


class Tile(BaseModel):
    """Restriction of a Hamilton cycle to one layer cycle.

    Internal tiles live on the 2w-cycle of an internal layer. Layer edge ``2j``
    joins ``v_j`` to ``w_j`` and edge ``2j + 1`` joins ``v_j`` to ``w_{j+1}``;
    ``v_j`` is left terminal ``j`` and ``w_j`` right terminal ``j``. End tiles
    live on a w-cycle whose edge ``j`` joins positions ``j`` and ``j + 1``; their
    terminals are recorded as right terminals.
    """

    model_config = ConfigDict(frozen=True)

    kind: TileKind
    width: int = Field(..., ge=3)
    edges: Tuple[int, ...] = Field(..., description="Indices of the layer-cycle edges kept")
    left_terminals: FrozenSet[int] = Field(default_factory=frozenset)
    right_terminals: FrozenSet[int] = Field(default_factory=frozenset)
    paths: Tuple[Tuple[PathEnd, PathEnd], ...] = Field(
        ..., description="Endpoints of each maximal path in the tile"
    )

    @property
    def c(self) -> int:
        return len(self.right_terminals) // 2

    def induced_partition(self) -> TerminalPartition:
        """Pairing of terminals by paths, for tiles whose paths all end on the right."""
        return TerminalPartition(
            width=self.width, pairs=tuple((a.position, b.position) for a, b in self.paths)
        )


class TransferSystem(BaseModel):
    """Transfer matrix with start and finish vectors for one (width, c)."""

    model_config = ConfigDict(frozen=True)

    width: int = Field(..., ge=3)
    pairs: int = Field(..., ge=1, description="Half-crossing c")
    reduced: bool = Field(True, description="Indexed by rotation orbits rather than partitions")
    index: Tuple[TerminalPartition, ...] = Field(
        ..., description="Orbit representatives (reduced) or all partitions"
    )
    matrix: Tuple[Tuple[int, ...], ...]
    v_s: Tuple[int, ...]
    v_f: Tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.index)

    def orbit_of(self, partition: TerminalPartition) -> int:
        """Row of the matrix that ``partition`` belongs to."""
        key = partition.canonical() if self.reduced else partition
        return self.index.index(key)


class GrowthConstants(BaseModel):
    """Exponential growth data of a typed nanotube count."""

    model_config = ConfigDict(frozen=True)

    width: int
    pairs: int
    char_poly: Tuple[int, ...] = Field(..., description="Coefficients, leading term first")
    dominant_root: float = Field(..., description="Growth factor per period of layers")
    prefactor_estimate: float
    period: int = Field(1, ge=1, description="Layer steps per dominant_root factor")
    sample_k: int = Field(..., description="Layer count used for the prefactor estimate")
