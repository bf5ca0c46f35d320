"""Runtime settings for robustprice."""

from __future__ import annotations

import os
from dataclasses import dataclass, fields, replace
from typing import Any, Mapping

from .constants import (
    DEFAULT_COUPLING_BUDGET,
    DEFAULT_D_CAP,
    DEFAULT_PRECISION,
    DEFAULT_SEARCH_BUDGET,
)

ENV_PREFIX = "ROBUSTPRICE_"

# Settings field -> environment variable suffix
_ENV_NAMES: dict[str, str] = {
    "d_cap": "D_CAP",
    "coupling_budget": "BUDGET",
    "search_budget": "SEARCH_BUDGET",
    "precision": "PRECISION",
    "jobs": "JOBS",
    "log_level": "LOG_LEVEL",
}

__all__ = ["Settings", "ENV_PREFIX"]


@dataclass(frozen=True)
class Settings:
    """Budgets and knobs shared by the oracle, the search and the CLI."""

    d_cap: int = DEFAULT_D_CAP
    coupling_budget: int = DEFAULT_COUPLING_BUDGET
    search_budget: int = DEFAULT_SEARCH_BUDGET
    precision: int = DEFAULT_PRECISION
    jobs: int = 1
    log_level: str = "WARNING"

    @classmethod
    def from_env(cls, environ: Mapping[str, str] | None = None) -> "Settings":
        """Build settings, letting ``ROBUSTPRICE_*`` variables override defaults."""
        env = os.environ if environ is None else environ
        values: dict[str, Any] = {}
        for field in fields(cls):
            raw = env.get(ENV_PREFIX + _ENV_NAMES[field.name])
            if raw is None or not raw.strip():
                continue
            if field.name == "log_level":
                values[field.name] = raw.strip().upper()
            else:
                try:
                    values[field.name] = int(raw)
                except ValueError as exc:
                    raise ValueError(
                        f"{ENV_PREFIX}{_ENV_NAMES[field.name]} must be an integer, got {raw!r}"
                    ) from exc
        return cls(**values)

    def replace(self, **changes: Any) -> "Settings":
        """Return a copy with the non-None ``changes`` applied."""
        return replace(self, **{k: v for k, v in changes.items() if v is not None})
