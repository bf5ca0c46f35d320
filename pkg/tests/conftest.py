"""Pytest configuration and fixtures for robustprice tests."""

import json
import random
from fractions import Fraction

import pytest

from robustprice.models import NOT_OFFERED, Instance, Marginal, Pricing, TieBreakRule

HALF = Fraction(1, 2)


def multiset_marginal(values, d):
    """Uniform marginal over a multiset of ``d`` values."""
    return Marginal.of([(v, Fraction(1, d)) for v in values])


def draw_case(rng):
    """Random small instance, pricing and rule for oracle comparisons.

    Two or three offered items share a multiset size d in 2..4 with values
    in 1..10; prices are halves in 0..11 so ties with values are common.
    Now and then an extra item is left unpriced.
    """
    n = rng.choice((2, 3))
    d = rng.choice((2, 3, 4))
    marginals = [
        multiset_marginal([rng.randint(1, 10) for _ in range(d)], d) for _ in range(n)
    ]
    prices = [Fraction(rng.randint(0, 22), 2) for _ in range(n)]
    if rng.random() < 0.25:
        spot = rng.randint(0, n)
        marginals.insert(spot, multiset_marginal([rng.randint(1, 10) for _ in range(d)], d))
        prices.insert(spot, NOT_OFFERED)
    rule = rng.choice(list(TieBreakRule))
    return Instance.from_marginals(marginals), Pricing(tuple(prices)), rule


@pytest.fixture
def two_item():
    """A: {1, 3} and B: {2, 4}, each value with probability 1/2."""
    return Instance.of(
        [
            ("A", Marginal.of([(1, HALF), (3, HALF)])),
            ("B", Marginal.of([(2, HALF), (4, HALF)])),
        ]
    )


@pytest.fixture
def two_item_pricing():
    """A at 1, B at 2."""
    return Pricing.of([1, 2])


@pytest.fixture
def identical():
    """Two items, each uniform on {1, 2}."""
    return Instance.from_marginals([Marginal.of([(1, HALF), (2, HALF)])] * 2)


@pytest.fixture
def rng():
    """Seeded generator so randomized checks are reproducible."""
    return random.Random(20240611)


@pytest.fixture
def random_case():
    """Factory drawing (instance, pricing, rule) triples."""
    return draw_case


@pytest.fixture
def write_json(tmp_path):
    """Write JSON data under tmp_path and return the file path."""

    def _write(name, data):
        path = tmp_path / name
        path.write_text(json.dumps(data), encoding="utf-8")
        return path

    return _write
