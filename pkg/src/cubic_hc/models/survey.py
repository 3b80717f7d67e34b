"""
Survey Models - Per-order aggregates of a corpus survey.
"""

from typing import Optional

from pydantic import BaseModel, Field, model_validator


class SurveyRow(BaseModel):
    """Aggregated Hamilton-cycle statistics for all corpus graphs of one order."""

    n: int = Field(..., ge=0, description="Vertex count")
    graph_count: int = Field(0, ge=0, description="Graphs of this order that passed the filter")
    hamiltonian_count: int = Field(0, ge=0, description="Graphs with at least one Hamilton cycle")
    min_hc: Optional[int] = Field(None, description="Minimum count over Hamiltonian graphs")
    max_hc: Optional[int] = Field(None, description="Maximum count over Hamiltonian graphs")
    argmax_id: Optional[int] = Field(None, description="Corpus index of a graph attaining max_hc")
    timeouts: int = Field(0, ge=0, description="Graphs whose search budget expired")

    @model_validator(mode="after")
    def _check_bounds(self) -> "SurveyRow":
        if self.min_hc is not None and self.max_hc is not None and self.min_hc > self.max_hc:
            raise ValueError(f"min_hc {self.min_hc} exceeds max_hc {self.max_hc}")
        # a Hamiltonian cubic graph has at least three Hamilton cycles
        if self.hamiltonian_count > 0 and self.min_hc is not None and self.min_hc < 3:
            raise ValueError(f"min_hc {self.min_hc} is below 3 for a Hamiltonian cubic order")
        return self

    def csv_fields(self) -> list:
        """Values in the column order n, graphs, hamiltonian, min, max, argmax_id."""
        return [
            self.n,
            self.graph_count,
            self.hamiltonian_count,
            "" if self.min_hc is None else self.min_hc,
            "" if self.max_hc is None else self.max_hc,
            "" if self.argmax_id is None else self.argmax_id,
        ]
