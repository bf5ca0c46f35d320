"""Buyer choice: the domination order over (item, utility, price) candidates."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, NamedTuple

from ..models.pricing import TieBreakRule


class Candidate(NamedTuple):
    item: int
    utility: Fraction
    price: Fraction


def rank(candidate: Candidate, rule: TieBreakRule) -> tuple[Fraction, tuple[Fraction, int]]:
    """Sort key under which the buyer's choice is the maximum."""
    return (candidate.utility, rule.key(candidate.item, candidate.price))


def dominates(a: Candidate, b: Candidate, rule: TieBreakRule) -> bool:
    """True iff the buyer prefers ``a`` to ``b``."""
    return rank(a, rule) > rank(b, rule)


def chosen(candidates: Iterable[Candidate], rule: TieBreakRule) -> Candidate:
    """The unique candidate dominating all others."""
    return max(candidates, key=lambda c: rank(c, rule))
