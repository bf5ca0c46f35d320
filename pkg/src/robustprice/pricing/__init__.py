"""Pricing rules, revenue bounds and the grid search."""

from __future__ import annotations

from .bounds import comonotonic_welfare, myerson, myerson_sum_upper_bound, robust_revenue
from .rules import (
    half_threshold_pricing,
    is_correlation_agnostic,
    max_median_single_price,
    mhr_factor,
    mhr_quantile_bound,
    optimal_quantile,
    quantile_price_single,
    single_price,
    uniform_pricing,
)
from .search import default_candidates, enumerate_pricings, search_maxmin

__all__ = [
    "comonotonic_welfare",
    "myerson",
    "myerson_sum_upper_bound",
    "robust_revenue",
    "half_threshold_pricing",
    "is_correlation_agnostic",
    "max_median_single_price",
    "mhr_factor",
    "mhr_quantile_bound",
    "optimal_quantile",
    "quantile_price_single",
    "single_price",
    "uniform_pricing",
    "default_candidates",
    "enumerate_pricings",
    "search_maxmin",
]
