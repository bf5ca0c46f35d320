"""Couplings of marginals and the Adversary's best response."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator


@dataclass(frozen=True)
class Chain:
    """Mass-weighted value profile: one value per instance item."""

    mass: Fraction
    values: tuple[Fraction, ...]


@dataclass(frozen=True)
class Coupling:
    """Joint distribution given as a list of chains.

    Use :meth:`merged` to build one: chains with identical values are summed
    and zero-mass chains dropped.
    """

    chains: tuple[Chain, ...]

    @classmethod
    def merged(cls, chains: Iterable[Chain]) -> "Coupling":
        masses: dict[tuple[Fraction, ...], Fraction] = {}
        for chain in chains:
            if chain.mass == 0:
                continue
            masses[chain.values] = masses.get(chain.values, Fraction(0)) + chain.mass
        return cls(tuple(Chain(mass, values) for values, mass in masses.items()))

    @property
    def total_mass(self) -> Fraction:
        return sum((c.mass for c in self.chains), Fraction(0))

    def __len__(self) -> int:
        return len(self.chains)

    def __iter__(self) -> Iterator[Chain]:
        return iter(self.chains)


@dataclass(frozen=True)
class BestResponse:
    """Revenue of a pricing under a coupling, with per-item sale probabilities.

    ``sale_prob`` has one entry per instance item followed by the null item
    (no purchase). ``order`` lists item indices, null included as
    ``len(instance)``, in the price order the Adversary processes them.
    """

    coupling: Coupling
    revenue: Fraction
    sale_prob: tuple[Fraction, ...]
    order: tuple[int, ...] = ()

    @property
    def no_sale_prob(self) -> Fraction:
        return self.sale_prob[-1]

    def prefix_sale_prob(self, length: int) -> Fraction:
        """Probability that one of the first ``length`` items of ``order`` is bought."""
        return sum((self.sale_prob[i] for i in self.order[:length]), Fraction(0))
