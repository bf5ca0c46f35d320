"""Pricings and buyer tie-breaking rules."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Iterator, Union

from .errors import NegativePrice, PricingMismatch


class NotOffered(Enum):
    """Marker for an item priced at infinity."""

    NOT_OFFERED = "inf"

    def __repr__(self) -> str:
        return "NOT_OFFERED"


NOT_OFFERED = NotOffered.NOT_OFFERED

Price = Union[Fraction, NotOffered]


def price_sort_key(price: Price) -> tuple[int, Fraction]:
    """Order finite prices ascending and NotOffered last."""
    if price is NOT_OFFERED:
        return (1, Fraction(0))
    return (0, price)  # type: ignore[return-value]


@dataclass(frozen=True)
class Pricing:
    """One price per item; ``NOT_OFFERED`` removes the item from sale."""

    prices: tuple[Price, ...]

    def __post_init__(self) -> None:
        for i, price in enumerate(self.prices):
            if price is not NOT_OFFERED and price < 0:  # type: ignore[operator]
                raise NegativePrice(i, price)  # type: ignore[arg-type]

    @classmethod
    def of(cls, prices: Iterable[object]) -> "Pricing":
        from ..core.rational import to_price

        return cls(tuple(to_price(p) for p in prices))

    @classmethod
    def none(cls, n: int) -> "Pricing":
        return cls((NOT_OFFERED,) * n)

    @classmethod
    def single(cls, n: int, item: int, price: object) -> "Pricing":
        """Offer only ``item`` at ``price``."""
        from ..core.rational import to_rational

        prices: list[Price] = [NOT_OFFERED] * n
        prices[item] = to_rational(price)
        return cls(tuple(prices))

    @classmethod
    def uniform(cls, n: int, price: object) -> "Pricing":
        from ..core.rational import to_rational

        return cls((to_rational(price),) * n)

    @property
    def offered(self) -> tuple[int, ...]:
        """Indices of items with a finite price."""
        return tuple(i for i, p in enumerate(self.prices) if p is not NOT_OFFERED)

    def finite(self, item: int) -> Fraction:
        price = self.prices[item]
        if price is NOT_OFFERED:
            raise KeyError(f"item {item} is not offered")
        return price  # type: ignore[return-value]

    def distinct_prices(self) -> frozenset[Fraction]:
        """Distinct finite prices; NotOffered is not counted."""
        return frozenset(self.prices[i] for i in self.offered)  # type: ignore[misc]

    def check_against(self, n_items: int) -> None:
        if len(self.prices) != n_items:
            raise PricingMismatch(n_items, len(self.prices))

    def sort_key(self) -> tuple[tuple[int, Fraction], ...]:
        """Lexicographic key used to break ties between equally good pricings."""
        return tuple(price_sort_key(p) for p in self.prices)

    def __len__(self) -> int:
        return len(self.prices)

    def __iter__(self) -> Iterator[Price]:
        return iter(self.prices)

    def __getitem__(self, index: int) -> Price:
        return self.prices[index]


class TieBreakRule(Enum):
    """How the buyer picks among items of equal utility.

    Ties go to the higher (or lower) price first and then to the lower item
    index, which gives a strict, acyclic order on candidates.
    """

    HIGHER_PRICE_FIRST = "high-price"
    LOWER_PRICE_FIRST = "low-price"

    def key(self, item: int, price: Fraction) -> tuple[Fraction, int]:
        """Preference key at equal utility; larger is preferred."""
        if self is TieBreakRule.HIGHER_PRICE_FIRST:
            return (price, -item)
        return (-price, -item)

    @classmethod
    def parse(cls, text: str) -> "TieBreakRule":
        for rule in cls:
            if rule.value == text or rule.name.lower() == text.lower():
                return rule
        raise ValueError(f"unknown tie-break rule {text!r}")


DEFAULT_RULE = TieBreakRule.HIGHER_PRICE_FIRST
