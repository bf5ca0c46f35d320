"""Discretized equal-revenue families."""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import NamedTuple

import mpmath

from ..constants import DEFAULT_PRECISION, MP_DPS
from ..models.distributions import Instance, Marginal
from ..models.errors import InvalidParams, InvalidRange

logger = logging.getLogger(__name__)


class EqRevFamily(NamedTuple):
    instance: Instance
    truncation: tuple[Fraction, ...]


def floor_rational(x: mpmath.mpf, precision: int) -> Fraction:
    """``x`` rounded down to a multiple of ``1 / precision``."""
    return Fraction(int(mpmath.floor(x * precision)), precision)


def truncated_eqrev(t: Fraction, grid: int, precision: int = DEFAULT_PRECISION) -> Marginal:
    """Equal-revenue CDF 1 - 1/v on [1, t) over ``grid`` geometric points, atom 1/t at t.

    Grid points are rounded down, and each carries the exact CDF mass of its
    cell, so every support value v sells with probability exactly 1/v.
    """
    if grid < 2:
        raise InvalidRange(f"grid must hold at least 2 points, got {grid}")
    if t <= 1:
        raise InvalidParams(f"truncation point {t} must exceed 1")
    with mpmath.workdps(MP_DPS):
        base = mpmath.mpf(t.numerator) / t.denominator
        points = [Fraction(1)] + [
            floor_rational(base ** (mpmath.mpf(k) / grid), precision) for k in range(1, grid)
        ]
    points.append(t)
    if any(lo >= hi for lo, hi in zip(points, points[1:])):
        raise InvalidParams(f"precision {precision} too coarse for {grid} points below {t}")
    support = [(lo, 1 / lo - 1 / hi) for lo, hi in zip(points, points[1:])]
    support.append((t, 1 / t))
    return Marginal.of(support)


def gen_truncated_eqrev(
    n: int, grid: int, precision: int = DEFAULT_PRECISION
) -> EqRevFamily:
    """Item ``j`` (1-based) is equal-revenue truncated at ``2^(j+1)``."""
    if n < 1:
        raise InvalidParams(f"need at least one item, got {n}")
    truncation = tuple(Fraction(2 ** (j + 1)) for j in range(1, n + 1))
    marginals = [truncated_eqrev(t, grid, precision) for t in truncation]
    logger.debug("truncated eqrev family: n=%d, grid=%d", n, grid)
    return EqRevFamily(Instance.from_marginals(marginals), truncation)


def gen_identical_eqrev(
    n: int, grid: int, precision: int = DEFAULT_PRECISION
) -> EqRevFamily:
    """``n`` copies of equal-revenue truncated at ``2^(n+1)``."""
    if n < 1:
        raise InvalidParams(f"need at least one item, got {n}")
    t = Fraction(2 ** (n + 1))
    marginal = truncated_eqrev(t, grid, precision)
    return EqRevFamily(Instance.from_marginals([marginal] * n), (t,) * n)
