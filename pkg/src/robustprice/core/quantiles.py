"""Marginal validation, CDF and quantiles."""

from __future__ import annotations

from fractions import Fraction
from itertools import accumulate

from ..models.distributions import Marginal
from ..models.errors import NegativeProb, NegativeValue, ProbSumMismatch, QOutOfRange
from .rational import to_rational


def validate_marginal(m: Marginal) -> Marginal:
    """Check a marginal and return its normalized form.

    Duplicate values are merged and zero-mass entries dropped before the
    probabilities are required to sum to exactly 1.

    Raises:
        NegativeValue, NegativeProb, ProbSumMismatch
    """
    merged: dict[Fraction, Fraction] = {}
    for raw_value, raw_prob in m.support:
        value = to_rational(raw_value)
        prob = to_rational(raw_prob)
        if value < 0:
            raise NegativeValue(value)
        if prob < 0:
            raise NegativeProb(prob)
        merged[value] = merged.get(value, Fraction(0)) + prob
    support = tuple((v, p) for v, p in sorted(merged.items()) if p > 0)
    total = sum((p for _, p in support), Fraction(0))
    if total != 1:
        raise ProbSumMismatch(total)
    return Marginal(support)


def cumulative(m: Marginal) -> tuple[Fraction, ...]:
    """CDF at each support value, in support order."""
    return tuple(accumulate(m.probs))


def cdf(m: Marginal, x: Fraction) -> Fraction:
    """Probability that the value is at most ``x``."""
    total = Fraction(0)
    for value, prob in m.support:
        if value > x:
            break
        total += prob
    return total


def quantile(m: Marginal, q: Fraction) -> Fraction:
    """Smallest support value whose CDF reaches ``q``."""
    q = to_rational(q)
    if q < 0 or q > 1:
        raise QOutOfRange(q)
    for value, level in zip(m.values, cumulative(m)):
        if level >= q:
            return value
    return m.max_value


def survival(m: Marginal, x: Fraction) -> Fraction:
    """Probability that the value is at least ``x``."""
    return sum((p for v, p in m.support if v >= x), Fraction(0))
