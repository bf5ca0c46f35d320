"""Simple pricing rules: single prices, quantile rules and half-thresholds."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

import mpmath

from ..constants import HALF, MP_DPS
from ..core.quantiles import quantile
from ..core.rational import to_rational
from ..models.distributions import Instance
from ..models.errors import QOutOfRange
from ..models.pricing import NOT_OFFERED, Price, Pricing


def uniform_pricing(n: int, price: object) -> Pricing:
    """Every item at the same price."""
    return Pricing.uniform(n, price)


def single_price(n: int, item: int, price: object) -> Pricing:
    """Only ``item`` offered."""
    return Pricing.single(n, item, price)


def is_correlation_agnostic(p: Pricing) -> bool:
    """True iff exactly one item is offered, so every coupling gives equal revenue."""
    return len(p.offered) == 1


def quantile_price_single(inst: Instance, q: object) -> Pricing:
    """Offer the item with the largest ``q``-quantile at that quantile.

    Ties go to the lowest index.
    """
    q = to_rational(q)
    levels = [quantile(m, q) for m in inst.marginals]
    best = max(range(len(levels)), key=lambda i: (levels[i], -i))
    return Pricing.single(len(inst), best, levels[best])


def max_median_single_price(inst: Instance) -> Pricing:
    """Offer the item with the largest median at its median."""
    return quantile_price_single(inst, HALF)


def _open_unit(q: object) -> mpmath.mpf:
    value = to_rational(q) if not isinstance(q, float) else q
    if not 0 < value < 1:
        raise QOutOfRange(value, "(0, 1)")
    if isinstance(value, Fraction):
        return mpmath.mpf(value.numerator) / value.denominator
    return mpmath.mpf(value)


def mhr_factor(q: object) -> float:
    """Approximation factor 1/(1-q) - 1/ln(1-q) of pricing at the q-quantile.

    Raises:
        QOutOfRange: unless 0 < q < 1.
    """
    with mpmath.workdps(MP_DPS):
        x = _open_unit(q)
        return float(1 / (1 - x) - 1 / mpmath.log(1 - x))


def optimal_quantile() -> float:
    """The quantile 1 - exp(-2 W(1/2)) minimizing :func:`mhr_factor`."""
    with mpmath.workdps(MP_DPS):
        return float(1 - mpmath.exp(-2 * mpmath.lambertw(mpmath.mpf(1) / 2).real))


def mhr_quantile_bound(x: object, q: object, q_prime: object) -> float:
    """Envelope x * ln(1-q') / ln(1-q) on the q'-quantile of an MHR
    distribution whose q-quantile is at most ``x``."""
    with mpmath.workdps(MP_DPS):
        lo = _open_unit(q)
        hi = _open_unit(q_prime)
        scale = mpmath.mpf(to_rational(x).numerator) / to_rational(x).denominator
        return float(scale * mpmath.log(1 - hi) / mpmath.log(1 - lo))


def half_threshold_pricing(
    trunc_points: Sequence[object], selected: Iterable[int]
) -> Pricing:
    """Price each selected item at half its truncation point; 0-based indices."""
    points = [to_rational(t) for t in trunc_points]
    for t in points:
        if t <= 0:
            raise ValueError(f"truncation point {t} is not positive")
    chosen = set(selected)
    for i in chosen:
        if not 0 <= i < len(points):
            raise IndexError(f"item {i} outside 0..{len(points) - 1}")
    prices: list[Price] = [
        points[i] / 2 if i in chosen else NOT_OFFERED for i in range(len(points))
    ]
    return Pricing(tuple(prices))
