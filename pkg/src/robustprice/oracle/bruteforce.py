"""Exhaustive ground truth over perfect couplings of multiset marginals."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product
from typing import Iterator

from ..adversary.evaluate import settle
from ..adversary.fill import attach_items
from ..constants import DEFAULT_COUPLING_BUDGET, DEFAULT_D_CAP
from ..core.working import purchase_order
from ..models.coupling import Chain, Coupling
from ..models.distributions import Instance
from ..models.errors import BudgetExceeded, DTooLarge
from ..models.pricing import Pricing, TieBreakRule

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MultisetInstance:
    """Every item as ``d`` equally likely values, sorted nonincreasing."""

    d: int
    values: tuple[tuple[Fraction, ...], ...]

    @property
    def n(self) -> int:
        return len(self.values)

    def coupling_count(self) -> int:
        return math.factorial(self.d) ** (self.n - 1)


def expand_to_multiset(inst: Instance, d_cap: int = DEFAULT_D_CAP) -> MultisetInstance:
    """Replicate each value ``prob * d`` times, ``d`` the lcm of all denominators.

    Raises:
        DTooLarge: ``d`` exceeds ``d_cap``.
    """
    d = math.lcm(*(prob.denominator for m in inst.marginals for prob in m.probs))
    if d > d_cap:
        raise DTooLarge(d, d_cap)
    values = tuple(
        tuple(v for v, prob in reversed(m.support) for _ in range(int(prob * d)))
        for m in inst.marginals
    )
    return MultisetInstance(d, values)


def enumerate_couplings(
    mi: MultisetInstance, budget: int = DEFAULT_COUPLING_BUDGET
) -> Iterator[Coupling]:
    """All perfect couplings, the first item's order held fixed.

    Raises:
        BudgetExceeded: immediately, before anything is yielded.
    """
    count = mi.coupling_count()
    if count > budget:
        raise BudgetExceeded(count, budget)
    logger.debug("enumerating %d couplings (n=%d, d=%d)", count, mi.n, mi.d)
    return _couplings(mi)


def _couplings(mi: MultisetInstance) -> Iterator[Coupling]:
    mass = Fraction(1, mi.d)
    first, rest = mi.values[0], mi.values[1:]
    for perms in product(permutations(range(mi.d)), repeat=mi.n - 1):
        yield Coupling.merged(
            Chain(
                mass,
                (first[k],) + tuple(vals[perm[k]] for vals, perm in zip(rest, perms)),
            )
            for k in range(mi.d)
        )


def _offered_view(
    inst: Instance, p: Pricing, d_cap: int, budget: int
) -> tuple[tuple[int, ...], Pricing, Iterator[Coupling]]:
    p.check_against(len(inst))
    offered = p.offered
    sub_pricing = Pricing(tuple(p.finite(i) for i in offered))
    mi = expand_to_multiset(inst.subset(offered), d_cap)
    return offered, sub_pricing, enumerate_couplings(mi, budget)


def _extend(inst: Instance, offered: tuple[int, ...], witness: Coupling) -> Coupling:
    partial = [
        (chain.mass, {item: value for item, value in zip(offered, chain.values)})
        for chain in witness
    ]
    return attach_items(partial, inst.marginals)


def min_revenue_bruteforce(
    inst: Instance,
    p: Pricing,
    rule: TieBreakRule,
    *,
    d_cap: int = DEFAULT_D_CAP,
    budget: int = DEFAULT_COUPLING_BUDGET,
) -> tuple[Fraction, Coupling]:
    """Minimum revenue over every perfect coupling of the offered items.

    The witness is the first minimizer in enumeration order, extended to
    the items that are not offered.
    """
    if not p.offered:
        p.check_against(len(inst))
        return Fraction(0), attach_items([(Fraction(1), {})], inst.marginals)
    offered, sub_pricing, couplings = _offered_view(inst, p, d_cap, budget)
    best: tuple[Fraction, Coupling] | None = None
    for coupling in couplings:
        revenue, _ = settle(sub_pricing, coupling.chains, rule)
        if best is None or revenue < best[0]:
            best = (revenue, coupling)
    assert best is not None
    return best[0], _extend(inst, offered, best[1])


def max_prefix_sale_prob(
    inst: Instance,
    p: Pricing,
    rule: TieBreakRule,
    length: int,
    *,
    d_cap: int = DEFAULT_D_CAP,
    budget: int = DEFAULT_COUPLING_BUDGET,
) -> Fraction:
    """Largest probability that the buyer picks one of the first ``length``
    items of the purchase order (null item first), over all couplings."""
    order = purchase_order(inst, p, rule)
    prefix = set(order[: max(length, 0)])
    if not prefix:
        return Fraction(0)
    if len(prefix) == len(order):
        return Fraction(1)
    offered, sub_pricing, couplings = _offered_view(inst, p, d_cap, budget)
    # Sub-instance index -> sale slot; the null slot is last in both.
    slots = [k for k, item in enumerate(offered) if item in prefix]
    if len(inst) in prefix:
        slots.append(len(offered))
    best = Fraction(0)
    for coupling in couplings:
        _, sold = settle(sub_pricing, coupling.chains, rule)
        best = max(best, sum((sold[k] for k in slots), Fraction(0)))
    return best
