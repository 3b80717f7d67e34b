"""cubic-hc Data Models

Pydantic models shared by every module of the toolkit:
- Graphs, layered nanotubes and induced 4-cycle handles
- Hamilton-cycle counts and edge usage
- Terminal partitions, tiles and transfer systems
- Survey rows
"""

from .counts import EdgeUsage, HamiltonCount
from .graph import Edge, FourCycleHandle, Graph, LayeredGraph
from .survey import SurveyRow
from .transfer import (
    GrowthConstants,
    Orbit,
    Pair,
    PathEnd,
    Side,
    TerminalPartition,
    Tile,
    TileKind,
    TransferSystem,
    pairs_cross,
)

__all__ = [
    # Graphs
    "Edge", "Graph", "LayeredGraph", "FourCycleHandle",

    # Counts
    "HamiltonCount", "EdgeUsage",

    # Transfer
    "Pair", "TerminalPartition", "Orbit", "TileKind", "Side", "PathEnd", "Tile",
    "TransferSystem", "GrowthConstants", "pairs_cross",

    # Survey
    "SurveyRow",
]
