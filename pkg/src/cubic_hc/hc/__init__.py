"""Exact Hamilton-cycle counting."""

from .crossing import classify_edges, count_by_crossing_type
from .oracle import count_hamilton_cycles_naive
from .search import (
    HamiltonSearch,
    count_hamilton_cycles,
    enumerate_hamilton_cycles,
    is_hamiltonian,
)

__all__ = [
    "HamiltonSearch",
    "count_hamilton_cycles",
    "is_hamiltonian",
    "enumerate_hamilton_cycles",
    "count_by_crossing_type",
    "classify_edges",
    "count_hamilton_cycles_naive",
]
