"""Worst-case couplings and revenue evaluation."""

from __future__ import annotations

from .best_response import WaterFill, best_response
from .comonotonic import comonotonic_coupling
from .evaluate import check_compatible, revenue_of_coupling, settle
from .fill import attach_items
from .sift_lift import (
    RootedChain,
    UtilityProfile,
    build_rooted_chains,
    free_levels,
    sift_lift,
)

__all__ = [
    "WaterFill",
    "best_response",
    "comonotonic_coupling",
    "check_compatible",
    "revenue_of_coupling",
    "settle",
    "attach_items",
    "RootedChain",
    "UtilityProfile",
    "build_rooted_chains",
    "free_levels",
    "sift_lift",
]
