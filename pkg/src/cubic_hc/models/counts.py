"""
Count Models - Results of Hamilton-cycle enumeration.
"""

from typing import Dict, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from .graph import Edge


class HamiltonCount(BaseModel):
    """Outcome of one exhaustive Hamilton-cycle count."""

    model_config = ConfigDict(frozen=True)

    total: int = Field(..., ge=0, description="Hamilton cycles, each counted once")
    per_edge: Optional[Dict[Edge, int]] = Field(
        None, description="Number of Hamilton cycles through each edge"
    )
    elapsed: float = Field(0.0, ge=0, description="Wall-clock seconds spent searching")
    nodes: int = Field(0, ge=0, description="Search nodes visited")


class EdgeUsage(BaseModel):
    """Edges split by how often Hamilton cycles use them."""

    model_config = ConfigDict(frozen=True)

    always: Tuple[Edge, ...] = Field(default_factory=tuple, description="On every Hamilton cycle")
    never: Tuple[Edge, ...] = Field(default_factory=tuple, description="On no Hamilton cycle")
    sometimes: Tuple[Edge, ...] = Field(default_factory=tuple, description="On some but not all")
