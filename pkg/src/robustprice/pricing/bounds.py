"""Myerson revenue, welfare and the robust revenue report."""

from __future__ import annotations

import logging
from fractions import Fraction

from ..adversary.best_response import best_response
from ..adversary.comonotonic import comonotonic_coupling
from ..adversary.evaluate import revenue_of_coupling
from ..models.distributions import Instance, Marginal
from ..models.pricing import DEFAULT_RULE, Pricing, TieBreakRule
from ..models.report import PricingReport

logger = logging.getLogger(__name__)


def myerson(m: Marginal) -> tuple[Fraction, Fraction]:
    """Monopoly price and revenue: the smallest maximizer of v * Pr[value >= v]."""
    best_price, best_revenue = m.max_value, Fraction(-1)
    tail = Fraction(0)
    # Descending scan; ">=" keeps the smallest maximizer.
    for value, prob in reversed(m.support):
        tail += prob
        revenue = value * tail
        if revenue >= best_revenue:
            best_price, best_revenue = value, revenue
    return best_price, best_revenue


def myerson_sum_upper_bound(inst: Instance, p: Pricing) -> Fraction:
    """Sum of the Myerson revenues of the offered items."""
    p.check_against(len(inst))
    return sum((myerson(inst[i].marginal)[1] for i in p.offered), Fraction(0))


def comonotonic_welfare(inst: Instance) -> Fraction:
    """Expected highest value under the comonotonic coupling."""
    return sum(
        (chain.mass * max(chain.values) for chain in comonotonic_coupling(inst)),
        Fraction(0),
    )


def robust_revenue(
    inst: Instance, p: Pricing, rule: TieBreakRule = DEFAULT_RULE
) -> PricingReport:
    """Worst-case revenue of ``p`` next to its comonotonic and Myerson-sum bounds."""
    worst = best_response(inst, p, rule)
    com = revenue_of_coupling(inst, p, comonotonic_coupling(inst), rule)
    report = PricingReport(
        pricing=p,
        robust_revenue=worst.revenue,
        comonotonic_revenue=com.revenue,
        myerson_sum_bound=myerson_sum_upper_bound(inst, p),
        witness=worst.coupling,
    )
    logger.debug(
        "robust %s, comonotonic %s, myerson sum %s",
        report.robust_revenue,
        report.comonotonic_revenue,
        report.myerson_sum_bound,
    )
    return report
