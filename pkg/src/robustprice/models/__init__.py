"""Domain models for robustprice."""

from __future__ import annotations

from .coupling import BestResponse, Chain, Coupling
from .distributions import Instance, Item, Marginal
from .errors import (
    BudgetExceeded,
    DTooLarge,
    DuplicateItemName,
    EmptyInstance,
    IncompatibleCoupling,
    InvalidParams,
    InvalidRange,
    NegativePrice,
    NegativeProb,
    NegativeValue,
    NotPerfectSquare,
    ParseError,
    PricingMismatch,
    ProbSumMismatch,
    QOutOfRange,
    RobustPriceError,
    RootNotFound,
    ValidationError,
)
from .pricing import DEFAULT_RULE, NOT_OFFERED, NotOffered, Price, Pricing, TieBreakRule
from .report import PricingReport, Report

__all__ = [
    "BestResponse",
    "Chain",
    "Coupling",
    "Instance",
    "Item",
    "Marginal",
    "DEFAULT_RULE",
    "NOT_OFFERED",
    "NotOffered",
    "Price",
    "Pricing",
    "TieBreakRule",
    "PricingReport",
    "Report",
    "BudgetExceeded",
    "DTooLarge",
    "DuplicateItemName",
    "EmptyInstance",
    "IncompatibleCoupling",
    "InvalidParams",
    "InvalidRange",
    "NegativePrice",
    "NegativeProb",
    "NegativeValue",
    "NotPerfectSquare",
    "ParseError",
    "PricingMismatch",
    "ProbSumMismatch",
    "QOutOfRange",
    "RobustPriceError",
    "RootNotFound",
    "ValidationError",
]
