"""
cubic-hc Configuration - Toolkit-wide settings passed from the CLI into operations.
"""

from typing import Optional

from pydantic import BaseModel, Field


class ToolkitConfig(BaseModel):
    """Standardized configuration for cubic-hc commands."""

    # Survey execution
    workers: int = Field(1, ge=1, description="Survey worker pool size (1 = run inline)")
    budget_seconds: Optional[float] = Field(
        None, gt=0, description="Default per-graph search budget in seconds"
    )

    # Logging
    log_level: str = Field("WARNING", description="Root logging level for CLI runs")

    # Guards
    max_cc_k: int = Field(6, ge=1, description="Largest k accepted by the cyclic connectivity scan")
    max_tile_width: int = Field(13, ge=3, description="Largest nanotube width for tile enumeration")

    # Asymptotics
    asymptotic_sample_k: int = Field(
        120, ge=8, description="Layer count used to estimate growth prefactors"
    )
