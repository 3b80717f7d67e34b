"""Transfer-matrix counting of Hamilton cycles in nanotubes."""

from .asymptotics import (
    DEFAULT_SAMPLE_K,
    characteristic_polynomial,
    growth_constants,
    per_vertex_growth,
    real_roots,
)
from .linalg import mat_mul, mat_pow, vec_mat
from .partitions import noncrossing_pair_partitions, rotation_orbits
from .system import (
    build_transfer_system,
    completes,
    total_nanotube_count,
    transfer_counts,
    transfer_step,
    typed_count,
    typed_counts,
)
from .tiles import MAX_TILE_WIDTH, end_tiles, internal_tiles, tiles_by_left_terminals

__all__ = [
    # Partitions
    "noncrossing_pair_partitions", "rotation_orbits",

    # Tiles
    "MAX_TILE_WIDTH", "internal_tiles", "end_tiles", "tiles_by_left_terminals",

    # Systems
    "transfer_step", "completes", "transfer_counts", "build_transfer_system",
    "typed_count", "typed_counts", "total_nanotube_count",
    "mat_mul", "mat_pow", "vec_mat",

    # Asymptotics
    "DEFAULT_SAMPLE_K", "characteristic_polynomial", "real_roots", "growth_constants",
    "per_vertex_growth",
]
