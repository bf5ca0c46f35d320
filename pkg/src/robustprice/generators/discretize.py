"""Down-rounded discretizations of continuous value distributions."""

from __future__ import annotations

from fractions import Fraction

import mpmath

from ..constants import DEFAULT_PRECISION, MP_DPS
from ..core.rational import to_rational
from ..models.distributions import Instance, Marginal
from ..models.errors import InvalidParams, InvalidRange
from .eqrev import floor_rational


def discretize_uniform(a: object, b: object, m: int) -> Marginal:
    """``m`` equal cells of U[a, b], each at its left endpoint with mass 1/m.

    Raises:
        InvalidRange: unless 0 <= a < b and m >= 2.
    """
    lo, hi = to_rational(a), to_rational(b)
    if not 0 <= lo < hi:
        raise InvalidRange(f"need 0 <= a < b, got [{lo}, {hi}]")
    if m < 2:
        raise InvalidRange(f"need at least 2 cells, got {m}")
    width = (hi - lo) / m
    return Marginal.of((lo + k * width, Fraction(1, m)) for k in range(m))


def discretize_exponential(
    rate: object | None = None,
    m: int = 200,
    q_cap: object = Fraction(99, 100),
    *,
    median: object | None = None,
    precision: int = DEFAULT_PRECISION,
) -> Marginal:
    """Exponential values over ``m`` equal-mass quantile cells of [0, q_cap].

    Each cell sits at its left-endpoint value -ln(1-q)/rate rounded down; the
    mass above ``q_cap`` is an atom at the ``q_cap`` value. Give either
    ``rate`` or ``median`` (rate = ln 2 / median).

    Raises:
        InvalidParams: bad rate, median, cap or cell count.
    """
    if (rate is None) == (median is None):
        raise InvalidParams("give exactly one of rate and median")
    cap = to_rational(q_cap)
    if not 0 < cap < 1:
        raise InvalidParams(f"q_cap must lie in (0, 1), got {cap}")
    if m < 1:
        raise InvalidParams(f"need at least one cell, got {m}")

    with mpmath.workdps(MP_DPS):
        if median is not None:
            mu = to_rational(median)
            if mu <= 0:
                raise InvalidParams(f"median must be positive, got {mu}")
            scale = (mpmath.mpf(mu.numerator) / mu.denominator) / mpmath.log(2)
        else:
            lam = to_rational(rate)
            if lam <= 0:
                raise InvalidParams(f"rate must be positive, got {lam}")
            scale = mpmath.mpf(lam.denominator) / lam.numerator

        def value_at(q: Fraction) -> Fraction:
            x = mpmath.mpf(q.numerator) / q.denominator
            return floor_rational(-mpmath.log(1 - x) * scale, precision)

        cell = cap / m
        support = [(value_at(k * cell), cell) for k in range(m)]
        support.append((value_at(cap), 1 - cap))
    return Marginal.of(support)


def gen_uniform_gap(eps: object, m: int) -> Instance:
    """U[1/4, 1/4 + eps] next to U[0, 1], both on ``m`` cells."""
    eps = to_rational(eps)
    narrow = discretize_uniform(Fraction(1, 4), Fraction(1, 4) + eps, m)
    wide = discretize_uniform(0, 1, m)
    return Instance.from_marginals([narrow, wide])
