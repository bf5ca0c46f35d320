"""Revenue of a pricing under a given coupling."""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import Iterable

from ..core.dominance import Candidate, chosen
from ..core.working import purchase_order
from ..models.coupling import BestResponse, Chain, Coupling
from ..models.distributions import Instance
from ..models.errors import IncompatibleCoupling
from ..models.pricing import Pricing, TieBreakRule

logger = logging.getLogger(__name__)

ZERO = Fraction(0)


def check_compatible(inst: Instance, c: Coupling) -> None:
    """Raise :class:`IncompatibleCoupling` unless ``c`` reproduces every marginal."""
    n = len(inst)
    balance: list[dict[Fraction, Fraction]] = [{} for _ in range(n)]
    for k, chain in enumerate(c.chains):
        if len(chain.values) != n:
            raise IncompatibleCoupling(
                f"chain {k} has {len(chain.values)} values, instance has {n} items"
            )
        if chain.mass <= 0:
            raise IncompatibleCoupling(f"chain {k} has non-positive mass {chain.mass}")
        for i, value in enumerate(chain.values):
            balance[i][value] = balance[i].get(value, ZERO) + chain.mass

    for i, item in enumerate(inst.items):
        expected = dict(item.marginal.support)
        if balance[i] != expected:
            for value in sorted(set(expected) | set(balance[i])):
                got = balance[i].get(value, ZERO)
                want = expected.get(value, ZERO)
                if got != want:
                    raise IncompatibleCoupling(
                        f"item {item.name!r} value {value}: coupling mass {got}, "
                        f"marginal mass {want}"
                    )


def settle(
    p: Pricing, chains: Iterable[Chain], rule: TieBreakRule
) -> tuple[Fraction, tuple[Fraction, ...]]:
    """Expected revenue and per-item sale probabilities (null last).

    No compatibility check is made; callers that enumerate many couplings of
    the same instance go through here directly.
    """
    n = len(p)
    offered = [(i, p.finite(i)) for i in p.offered]
    null = Candidate(n, ZERO, ZERO)
    revenue = ZERO
    sold = [ZERO] * (n + 1)
    for chain in chains:
        pick = chosen(
            [Candidate(i, chain.values[i] - price, price) for i, price in offered] + [null],
            rule,
        )
        sold[pick.item] += chain.mass
        revenue += chain.mass * pick.price
    return revenue, tuple(sold)


def revenue_of_coupling(
    inst: Instance, p: Pricing, c: Coupling, rule: TieBreakRule
) -> BestResponse:
    """Exact expected revenue of ``p`` when values are drawn from ``c``.

    Raises:
        PricingMismatch: pricing length differs from the instance.
        IncompatibleCoupling: ``c`` does not reproduce the marginals.
    """
    p.check_against(len(inst))
    check_compatible(inst, c)
    revenue, sold = settle(p, c.chains, rule)
    logger.debug("revenue %s over %d chains", revenue, len(c))
    return BestResponse(c, revenue, sold, purchase_order(inst, p, rule))
