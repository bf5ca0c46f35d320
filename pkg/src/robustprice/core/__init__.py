"""Shared machinery: rationals, quantiles, null augmentation, buyer choice."""

from __future__ import annotations

from .dominance import Candidate, chosen, dominates, rank
from .quantiles import cdf, cumulative, quantile, survival, validate_marginal
from .rational import Rational, format_price, format_rational, to_price, to_rational
from .working import (
    NULL_MARGINAL,
    UtilityNode,
    WorkingInstance,
    WorkingItem,
    augment_with_null,
    processing_order,
    purchase_order,
)

__all__ = [
    "Candidate",
    "chosen",
    "dominates",
    "rank",
    "cdf",
    "cumulative",
    "quantile",
    "survival",
    "validate_marginal",
    "Rational",
    "format_price",
    "format_rational",
    "to_price",
    "to_rational",
    "NULL_MARGINAL",
    "UtilityNode",
    "WorkingInstance",
    "WorkingItem",
    "augment_with_null",
    "processing_order",
    "purchase_order",
]
