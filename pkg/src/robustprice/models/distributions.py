"""Marginal distributions and instances."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

from .errors import DuplicateItemName, EmptyInstance


@dataclass(frozen=True)
class Marginal:
    """Finite value distribution of one item.

    ``support`` is a tuple of ``(value, prob)`` pairs. Instances built with
    :meth:`of` are normalized: values strictly increasing, every probability
    positive, probabilities summing to exactly 1.
    """

    support: tuple[tuple[Fraction, Fraction], ...]

    @classmethod
    def of(cls, pairs: Iterable[tuple[object, object]]) -> "Marginal":
        """Validate and normalize raw ``(value, prob)`` pairs."""
        from ..core.quantiles import validate_marginal

        return validate_marginal(cls(tuple(pairs)))  # type: ignore[arg-type]

    @classmethod
    def point(cls, value: object) -> "Marginal":
        return cls.of([(value, 1)])

    @property
    def values(self) -> tuple[Fraction, ...]:
        return tuple(v for v, _ in self.support)

    @property
    def probs(self) -> tuple[Fraction, ...]:
        return tuple(p for _, p in self.support)

    @property
    def min_value(self) -> Fraction:
        return self.support[0][0]

    @property
    def max_value(self) -> Fraction:
        return self.support[-1][0]

    def __len__(self) -> int:
        return len(self.support)

    def __iter__(self) -> Iterator[tuple[Fraction, Fraction]]:
        return iter(self.support)


@dataclass(frozen=True)
class Item:
    name: str
    marginal: Marginal


@dataclass(frozen=True)
class Instance:
    """Ordered, named collection of item marginals."""

    items: tuple[Item, ...]

    def __post_init__(self) -> None:
        if not self.items:
            raise EmptyInstance()
        seen: set[str] = set()
        for item in self.items:
            if item.name in seen:
                raise DuplicateItemName(item.name)
            seen.add(item.name)

    @classmethod
    def of(cls, items: Iterable[tuple[str, Marginal]]) -> "Instance":
        return cls(tuple(Item(name, marginal) for name, marginal in items))

    @classmethod
    def from_marginals(
        cls, marginals: Iterable[Marginal], prefix: str = "item"
    ) -> "Instance":
        """Name items ``item1``, ``item2``, ... in order."""
        return cls.of((f"{prefix}{i}", m) for i, m in enumerate(marginals, start=1))

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(item.name for item in self.items)

    @property
    def marginals(self) -> tuple[Marginal, ...]:
        return tuple(item.marginal for item in self.items)

    def subset(self, indices: Iterable[int]) -> "Instance":
        """Sub-instance keeping the given item indices in order."""
        return Instance(tuple(self.items[i] for i in indices))

    def __len__(self) -> int:
        return len(self.items)

    def __getitem__(self, index: int) -> Item:
        return self.items[index]
