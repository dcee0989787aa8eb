from typing import Any, Dict, Optional

from pydantic import BaseModel, ConfigDict, Field


class AnalyzerConfig(BaseModel):
    """Configuration settings for analyzers"""

    name: str
    description: str
    parameters: Dict[str, Any] = {}  # the parameters this analyzer accepts, with defaults


class AnalyzerParameters(BaseModel):
    """Every parameter an analyzer may take; unknown names are rejected."""

    model_config = ConfigDict(extra="forbid")

    max_lattice: Optional[int] = Field(default=None, ge=1)
    workers: int = Field(default=1, ge=1)
    strict_finite: bool = False
