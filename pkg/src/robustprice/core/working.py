"""Working instance: offered items plus the null (no purchase) item."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..constants import NULL_ITEM_NAME
from ..models.distributions import Instance, Item, Marginal
from ..models.pricing import Pricing, TieBreakRule

NULL_MARGINAL = Marginal(((Fraction(0), Fraction(1)),))


@dataclass(frozen=True)
class WorkingItem:
    """An offered item, or the null item when ``origin == null index``."""

    origin: int
    name: str
    marginal: Marginal
    price: Fraction


@dataclass(frozen=True)
class WorkingInstance:
    """Offered items in original order followed by the null item.

    ``origin`` maps each working position back to the original item index;
    the null item maps to ``n_original`` so that it loses every index tie.
    """

    items: tuple[WorkingItem, ...]
    n_original: int

    @property
    def origin(self) -> tuple[int, ...]:
        return tuple(item.origin for item in self.items)

    @property
    def null_index(self) -> int:
        return self.n_original

    @property
    def instance(self) -> Instance:
        return Instance(tuple(Item(w.name, w.marginal) for w in self.items))

    @property
    def pricing(self) -> Pricing:
        return Pricing(tuple(w.price for w in self.items))

    def __len__(self) -> int:
        return len(self.items)


@dataclass(slots=True)
class UtilityNode:
    """One support value of a working item, with its still-uncoupled mass."""

    item: int
    value: Fraction
    utility: Fraction
    prob: Fraction
    remaining: Fraction


def augment_with_null(inst: Instance, p: Pricing) -> WorkingInstance:
    """Drop items that are not offered and append the null item at price 0."""
    p.check_against(len(inst))
    items = [
        WorkingItem(i, inst[i].name, inst[i].marginal, p.finite(i)) for i in p.offered
    ]
    items.append(WorkingItem(len(inst), NULL_ITEM_NAME, NULL_MARGINAL, Fraction(0)))
    return WorkingInstance(tuple(items), len(inst))


def processing_order(work: WorkingInstance, rule: TieBreakRule) -> tuple[int, ...]:
    """Working positions by ascending price.

    Among equal prices the item the buyer abandons at a tie comes first, so
    the null item always leads.
    """
    return tuple(
        sorted(
            range(len(work)),
            key=lambda pos: (
                work.items[pos].price,
                rule.key(work.items[pos].origin, work.items[pos].price),
            ),
        )
    )


def purchase_order(inst: Instance, p: Pricing, rule: TieBreakRule) -> tuple[int, ...]:
    """Original item indices (null as ``len(inst)``) in processing order."""
    work = augment_with_null(inst, p)
    return tuple(work.items[pos].origin for pos in processing_order(work, rule))
