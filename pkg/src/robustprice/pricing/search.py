"""Exhaustive max-min search over a finite price grid."""

from __future__ import annotations

import logging
import math
from dataclasses import replace
from fractions import Fraction
from itertools import combinations, product
from multiprocessing import Pool
from typing import Iterable, Iterator, Sequence

from ..adversary.best_response import best_response
from ..constants import DEFAULT_SEARCH_BUDGET, SEARCH_LABEL
from ..core.rational import to_rational
from ..models.distributions import Instance
from ..models.errors import BudgetExceeded
from ..models.pricing import DEFAULT_RULE, NOT_OFFERED, Price, Pricing, TieBreakRule
from ..models.report import PricingReport
from .bounds import robust_revenue

logger = logging.getLogger(__name__)

# Worker-process state, set by _init_worker.
_worker_inst: Instance | None = None
_worker_rule: TieBreakRule = DEFAULT_RULE


def default_candidates(inst: Instance) -> tuple[tuple[Fraction, ...], ...]:
    """Every item may be priced at any support value of any item."""
    values = tuple(sorted({v for m in inst.marginals for v in m.values}))
    return (values,) * len(inst)


def _normalize(
    inst: Instance, candidates: Sequence[Iterable[object]] | None
) -> tuple[tuple[Fraction, ...], ...]:
    if candidates is None:
        return default_candidates(inst)
    grid = tuple(tuple(sorted({to_rational(c) for c in cands})) for cands in candidates)
    if len(grid) != len(inst):
        raise ValueError(f"candidate sets for {len(grid)} items, instance has {len(inst)}")
    return grid


def _price_sets(
    grid: tuple[tuple[Fraction, ...], ...], max_distinct: int
) -> Iterator[tuple[Fraction, ...]]:
    union = sorted({c for cands in grid for c in cands})
    for size in range(max_distinct + 1):
        yield from combinations(union, size)


def _count(grid: tuple[tuple[Fraction, ...], ...], max_distinct: int | None) -> int:
    if max_distinct is None:
        return math.prod(len(cands) + 1 for cands in grid)
    total = 0
    for chosen in _price_sets(grid, max_distinct):
        allowed = set(chosen)
        total += math.prod(1 + len(allowed.intersection(cands)) for cands in grid)
    return total


def enumerate_pricings(
    grid: tuple[tuple[Fraction, ...], ...], max_distinct: int | None
) -> Iterator[Pricing]:
    """Pricings on the grid, NotOffered always allowed.

    With ``max_distinct`` only pricings using at most that many distinct
    finite prices are produced, each exactly once.
    """
    if max_distinct is None:
        for prices in product(*(((NOT_OFFERED,) + cands) for cands in grid)):
            yield Pricing(prices)
        return
    for chosen in _price_sets(grid, max_distinct):
        allowed = set(chosen)
        options: list[tuple[Price, ...]] = [
            (NOT_OFFERED,) + tuple(c for c in chosen if c in cands) for cands in grid
        ]
        for prices in product(*options):
            pricing = Pricing(prices)
            if pricing.distinct_prices() == allowed:
                yield pricing


def _init_worker(inst: Instance, rule: TieBreakRule) -> None:
    global _worker_inst, _worker_rule
    _worker_inst, _worker_rule = inst, rule


def _evaluate(p: Pricing) -> tuple[Pricing, Fraction]:
    assert _worker_inst is not None
    return p, best_response(_worker_inst, p, _worker_rule).revenue


def search_maxmin(
    inst: Instance,
    candidates: Sequence[Iterable[object]] | None = None,
    max_distinct: int | None = None,
    rule: TieBreakRule = DEFAULT_RULE,
    *,
    budget: int = DEFAULT_SEARCH_BUDGET,
    jobs: int = 1,
) -> PricingReport:
    """Best robust revenue over a price grid; a benchmark, not an optimizer.

    Ties between equally good pricings go to the lexicographically least one
    (finite prices before NotOffered). Parallel and serial runs agree.

    Raises:
        BudgetExceeded: the grid holds more than ``budget`` pricings.
    """
    if max_distinct is not None and max_distinct < 0:
        raise ValueError("max_distinct must be non-negative")
    grid = _normalize(inst, candidates)
    required = _count(grid, max_distinct)
    if required > budget:
        raise BudgetExceeded(required, budget, what="pricings")
    logger.info("searching %d pricings", required)

    pricings = enumerate_pricings(grid, max_distinct)
    if jobs > 1:
        with Pool(jobs, initializer=_init_worker, initargs=(inst, rule)) as pool:
            results = list(pool.imap(_evaluate, pricings, chunksize=16))
    else:
        results = [(p, best_response(inst, p, rule).revenue) for p in pricings]

    best_pricing, best_revenue = results[0]
    for p, revenue in results[1:]:
        if revenue > best_revenue or (
            revenue == best_revenue and p.sort_key() < best_pricing.sort_key()
        ):
            best_pricing, best_revenue = p, revenue
    logger.info("best on grid: %s with revenue %s", best_pricing.prices, best_revenue)

    report = robust_revenue(inst, best_pricing, rule)
    return replace(report, label=SEARCH_LABEL, evaluated=len(results))
