"""Robustprice - correlation-robust pricing for a unit-demand buyer."""

from __future__ import annotations

from .adversary import best_response, comonotonic_coupling, revenue_of_coupling, sift_lift
from .config import Settings
from .models import (
    NOT_OFFERED,
    BestResponse,
    Chain,
    Coupling,
    Instance,
    Marginal,
    Pricing,
    PricingReport,
    RobustPriceError,
    TieBreakRule,
)
from .oracle import max_prefix_sale_prob, min_revenue_bruteforce
from .pricing import robust_revenue, search_maxmin

__version__ = "0.1.0"

__all__ = [
    "NOT_OFFERED",
    "BestResponse",
    "Chain",
    "Coupling",
    "Instance",
    "Marginal",
    "Pricing",
    "PricingReport",
    "RobustPriceError",
    "Settings",
    "TieBreakRule",
    "best_response",
    "comonotonic_coupling",
    "max_prefix_sale_prob",
    "min_revenue_bruteforce",
    "revenue_of_coupling",
    "robust_revenue",
    "search_maxmin",
    "sift_lift",
]
