"""Graph construction, structural queries, families and fixtures."""

from .connectivity import (
    MAX_CC_K,
    find_cycle_separating_cut,
    is_cycle_separating,
    is_cyclically_k_edge_connected,
)
from .core import boundary, build_graph, girth
from .fixtures import BASE38_HANDLES, base38, fixture, fixture_names
from .generators import (
    generalized_petersen,
    ladder_extension,
    nanotube,
    ring_of_ladders,
    successor_handle,
    validate_four_cycle,
)

__all__ = [
    # Core
    "build_graph", "girth", "boundary",

    # Connectivity
    "MAX_CC_K", "is_cyclically_k_edge_connected", "find_cycle_separating_cut",
    "is_cycle_separating",

    # Families
    "generalized_petersen", "ring_of_ladders", "nanotube", "ladder_extension",
    "successor_handle", "validate_four_cycle",

    # Fixtures
    "fixture", "fixture_names", "base38", "BASE38_HANDLES",
]
