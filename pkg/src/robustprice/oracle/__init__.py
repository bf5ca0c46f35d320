"""Brute-force oracle for small instances."""

from __future__ import annotations

from .bruteforce import (
    MultisetInstance,
    enumerate_couplings,
    expand_to_multiset,
    max_prefix_sale_prob,
    min_revenue_bruteforce,
)

__all__ = [
    "MultisetInstance",
    "enumerate_couplings",
    "expand_to_multiset",
    "max_prefix_sale_prob",
    "min_revenue_bruteforce",
]
