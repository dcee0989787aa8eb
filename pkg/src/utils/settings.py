"""Engine settings: defaults, then environment (optionally from .env), then flags."""

import os
from typing import Any, Optional

from dotenv import load_dotenv
from pydantic import BaseModel, Field

from data.cache import DEFAULT_CACHE_ENTRIES
from graph.constructions import DEFAULT_MAX_PATHS
from graph.lattice import DEFAULT_MAX_LATTICE

ENVIRONMENT = {
    "max_lattice": "LPA_MAX_LATTICE",
    "max_paths": "LPA_MAX_PATHS",
    "cache_entries": "LPA_CACHE_ENTRIES",
    "strict_finite": "LPA_STRICT_FINITE",
    "workers": "LPA_WORKERS",
    "log_level": "LPA_LOG_LEVEL",
}


class EngineSettings(BaseModel):
    max_lattice: int = Field(default=DEFAULT_MAX_LATTICE, ge=1)
    max_paths: int = Field(default=DEFAULT_MAX_PATHS, ge=1)
    cache_entries: int = Field(default=DEFAULT_CACHE_ENTRIES, ge=1)
    strict_finite: bool = False
    workers: int = Field(default=1, ge=1)
    oracle: bool = False
    log_level: str = "WARNING"


def load_settings(env_file: Optional[str] = None, **overrides: Any) -> EngineSettings:
    """Build settings from the environment; ``None`` overrides are ignored.

    ``env_file`` names a dotenv file; by default the nearest ``.env`` is used.

    Raises:
        pydantic.ValidationError: an environment value or override is malformed.
    """
    load_dotenv(env_file)
    values: dict[str, Any] = {}
    for field, variable in ENVIRONMENT.items():
        raw = os.getenv(variable)
        if raw is not None and raw.strip():
            values[field] = raw.strip()
    values.update({k: v for k, v in overrides.items() if v is not None})
    return EngineSettings(**values)
