"""Instances encoding maximum independent set, and their revenue bounds."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable

from ..models.distributions import Instance, Marginal
from ..models.errors import NotPerfectSquare
from ..models.pricing import NOT_OFFERED, Price, Pricing
from .graphs import Graph


def _root(n: int) -> int:
    root = math.isqrt(n)
    if n < 1 or root * root != n:
        raise NotPerfectSquare(n)
    return root


def gen_mis(g: Graph) -> Instance:
    """One item per vertex.

    Vertex ``i`` takes value ``2^(i n)`` with probability ``2^(-i n)`` and,
    for each neighbour ``j > i``, value ``2^(j n)`` with probability
    ``2^(-j n) / sqrt(n)``; the remaining mass sits at 0.

    Raises:
        NotPerfectSquare: ``g.n`` is not a perfect square.
    """
    n = g.n
    root = _root(n)
    marginals = []
    for i in g.vertices:
        support = [(Fraction(2 ** (i * n)), Fraction(1, 2 ** (i * n)))]
        support += [
            (Fraction(2 ** (j * n)), Fraction(1, 2 ** (j * n) * root))
            for j in g.neighbors(i)
            if j > i
        ]
        rest = 1 - sum((prob for _, prob in support), Fraction(0))
        marginals.append(Marginal.of(support + [(Fraction(0), rest)]))
    return Instance.from_marginals(marginals, prefix="v")


def is_pricing(g: Graph, vertices: Iterable[int]) -> Pricing:
    """Price vertex ``i`` of the (1-based) set at ``2^(i n - 1)``; the rest are not offered."""
    chosen = set(vertices)
    for v in chosen:
        if v not in g.vertices:
            raise ValueError(f"vertex {v} outside 1..{g.n}")
    prices: list[Price] = [
        Fraction(2 ** (i * g.n - 1)) if i in chosen else NOT_OFFERED for i in g.vertices
    ]
    return Pricing(tuple(prices))


def mis_lower_bound(s_size: int, n: int) -> Fraction:
    """Robust revenue guaranteed by an independent set of ``s_size`` vertices."""
    root = _root(n)
    return Fraction(1, 2) * (1 - Fraction(root, 2 ** (n - 1))) * s_size


def mis_upper_bound(m_size: int, n: int) -> Fraction:
    """Cap on any robust revenue given a maximum independent set of ``m_size``."""
    root = _root(n)
    return (m_size + 2) * root + Fraction(3 * n, 2**n)
