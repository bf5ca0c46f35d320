"""Extend partial couplings with further items by water-filling."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from ..models.coupling import Chain, Coupling
from ..models.distributions import Marginal

PartialChain = tuple[Fraction, Mapping[int, Fraction]]


def attach_items(partial: Iterable[PartialChain], marginals: Sequence[Marginal]) -> Coupling:
    """Complete partial chains so that every item in ``marginals`` has a value.

    Each partial chain is ``(mass, {item: value})``. Items missing from the
    chains are attached one at a time, handing out the item's support in
    ascending order to the chains in their given order and splitting a chain
    whenever a support value runs out partway through it. The result is
    deterministic and compatible provided the partial masses sum to 1.
    """
    pieces: list[tuple[Fraction, dict[int, Fraction]]] = [
        (mass, dict(values)) for mass, values in partial if mass > 0
    ]
    present = set(pieces[0][1]) if pieces else set()

    for item, marginal in enumerate(marginals):
        if item in present:
            continue
        support = iter(marginal.support)
        value, left = next(support)
        filled: list[tuple[Fraction, dict[int, Fraction]]] = []
        for mass, values in pieces:
            while mass > 0:
                if left == 0:
                    value, left = next(support)
                take = min(mass, left)
                filled.append((take, {**values, item: value}))
                mass -= take
                left -= take
        pieces = filled

    n = len(marginals)
    return Coupling.merged(
        Chain(mass, tuple(values[i] for i in range(n))) for mass, values in pieces
    )
