"""
cubic-hc - Exact Hamilton-cycle enumeration for cubic planar graph families.

The package bundles graph generators and fixtures, an exhaustive Hamilton-cycle
counter, closed-form evaluators, and a transfer-matrix engine for nanotubes of
any fixed width.
"""

from .config import ToolkitConfig
from .exceptions import HCError, SearchTimeoutError, ValidationError
from .formulas import FibCache, n5_count, rl_count, schwenk_count

# Graph construction and families
from .graphs import (
    BASE38_HANDLES,
    build_graph,
    fixture,
    fixture_names,
    generalized_petersen,
    girth,
    is_cyclically_k_edge_connected,
    ladder_extension,
    nanotube,
    ring_of_ladders,
    successor_handle,
)

# Hamilton-cycle counting
from .hc import (
    classify_edges,
    count_by_crossing_type,
    count_hamilton_cycles,
    count_hamilton_cycles_naive,
    is_hamiltonian,
)

# File formats and surveys
from .io import (
    read_edge_list,
    read_planar_code,
    survey,
    survey_async,
    write_edge_list,
    write_planar_code,
)
from .models import (
    EdgeUsage,
    FourCycleHandle,
    Graph,
    GrowthConstants,
    HamiltonCount,
    LayeredGraph,
    SurveyRow,
    TerminalPartition,
    Tile,
    TransferSystem,
)

# Transfer matrices
from .transfer import (
    build_transfer_system,
    end_tiles,
    growth_constants,
    internal_tiles,
    noncrossing_pair_partitions,
    per_vertex_growth,
    rotation_orbits,
    total_nanotube_count,
    transfer_step,
    typed_count,
)

__version__ = "0.1.0"

__all__ = [
    # Configuration and errors
    "ToolkitConfig", "HCError", "ValidationError", "SearchTimeoutError",

    # Models
    "Graph", "LayeredGraph", "FourCycleHandle", "HamiltonCount", "EdgeUsage",
    "TerminalPartition", "Tile", "TransferSystem", "GrowthConstants", "SurveyRow",

    # Graphs
    "build_graph", "girth", "is_cyclically_k_edge_connected",
    "generalized_petersen", "ring_of_ladders", "nanotube", "ladder_extension",
    "successor_handle", "fixture", "fixture_names", "BASE38_HANDLES",

    # Counting
    "count_hamilton_cycles", "is_hamiltonian", "count_by_crossing_type",
    "classify_edges", "count_hamilton_cycles_naive",

    # Transfer
    "noncrossing_pair_partitions", "rotation_orbits", "internal_tiles", "end_tiles",
    "transfer_step", "build_transfer_system", "typed_count", "total_nanotube_count",
    "growth_constants", "per_vertex_growth",

    # Formulas
    "FibCache", "schwenk_count", "rl_count", "n5_count",

    # IO
    "read_planar_code", "write_planar_code", "read_edge_list", "write_edge_list",
    "survey", "survey_async",
]
