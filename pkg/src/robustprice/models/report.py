"""Result records produced by the pricing module and the CLI."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from ..constants import ROBUST_LABEL
from .coupling import Coupling
from .pricing import Pricing


@dataclass(frozen=True)
class PricingReport:
    """Robust revenue of a pricing next to its two upper bounds.

    ``label`` is ``"robust"`` for a direct evaluation and ``"best-on-grid"``
    when the pricing came out of :func:`search_maxmin`.
    """

    pricing: Pricing
    robust_revenue: Fraction
    comonotonic_revenue: Fraction
    myerson_sum_bound: Fraction
    witness: Coupling
    label: str = ROBUST_LABEL
    evaluated: int = 1


@dataclass
class Report:
    """What the CLI prints for one command."""

    command: str
    inputs: dict[str, str]
    digest: str
    results: dict[str, Any]
    witness: list[dict[str, Any]] | None = None
    elapsed_seconds: float = 0.0
    extra: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        data: dict[str, Any] = {
            "command": self.command,
            "inputs": self.inputs,
            "digest": self.digest,
            "results": self.results,
        }
        if self.witness is not None:
            data["witness"] = self.witness
        data["elapsed_seconds"] = round(self.elapsed_seconds, 4)
        return data
