"""Replay of the sift-and-lift exchange on rooted partial couplings.

Works on uniform multisets of utilities: every item holds ``d`` utilities,
sorted nonincreasing, and a chain is rooted at a utility of the first or the
second item and carries one utility of each further item.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from ..core.dominance import Candidate, rank
from ..models.errors import RootNotFound
from ..models.pricing import TieBreakRule


@dataclass(frozen=True)
class UtilityProfile:
    """Per-item utility multisets plus the prices that break ties."""

    utilities: tuple[tuple[Fraction, ...], ...]
    prices: tuple[Fraction, ...]
    rule: TieBreakRule

    def __post_init__(self) -> None:
        sizes = {len(u) for u in self.utilities}
        if len(sizes) != 1:
            raise ValueError("every item needs the same number of utilities")
        if len(self.prices) != len(self.utilities):
            raise ValueError("one price per item is required")
        for u in self.utilities:
            if list(u) != sorted(u, reverse=True):
                raise ValueError("utilities must be sorted nonincreasing")

    @property
    def d(self) -> int:
        return len(self.utilities[0])

    @property
    def n(self) -> int:
        return len(self.utilities)

    def rank(self, item: int, level: int) -> tuple:
        return rank(
            Candidate(item, self.utilities[item][level], self.prices[item]), self.rule
        )

    def precedes(self, item: int, level: int, other: int, other_level: int) -> bool:
        """True iff utility ``level`` of ``item`` is dominated by the other one."""
        return self.rank(item, level) < self.rank(other, other_level)


@dataclass(frozen=True)
class RootedChain:
    """``root`` is 0 or 1; ``tail[i - 2]`` is the level used for item ``i``."""

    root: int
    level: int
    tail: tuple[int, ...]


def _root_order(profile: UtilityProfile, chain: RootedChain) -> tuple[Fraction, int]:
    # Joint order of the first two items: utility, then the lower index first.
    return (profile.utilities[chain.root][chain.level], -chain.root)


def _highest_free_dominated(
    profile: UtilityProfile, taken: set[int], item: int, root: int, level: int
) -> int | None:
    for candidate in range(profile.d):
        if candidate not in taken and profile.precedes(item, candidate, root, level):
            return candidate
    return None


def build_rooted_chains(profile: UtilityProfile, k1: int, k2: int) -> tuple[RootedChain, ...]:
    """Root chains at the top ``k1`` utilities of item 0 and top ``k2`` of item 1.

    Roots are taken in nonincreasing joint order and each grabs the highest
    still-free utility of every further item that it dominates.

    Raises:
        ValueError: some root dominates no free utility of a further item.
    """
    roots = [RootedChain(0, level, ()) for level in range(k1)]
    roots += [RootedChain(1, level, ()) for level in range(k2)]
    roots.sort(key=lambda chain: _root_order(profile, chain), reverse=True)

    taken: list[set[int]] = [set() for _ in range(profile.n)]
    built = []
    for chain in roots:
        tail = []
        for item in range(2, profile.n):
            level = _highest_free_dominated(
                profile, taken[item], item, chain.root, chain.level
            )
            if level is None:
                raise ValueError(
                    f"root ({chain.root}, {chain.level}) dominates no free utility"
                    f" of item {item}"
                )
            taken[item].add(level)
            tail.append(level)
        built.append(RootedChain(chain.root, chain.level, tuple(tail)))
    return tuple(built)


def sift_lift(
    profile: UtilityProfile, chains: Iterable[RootedChain], root_level: int
) -> tuple[RootedChain, ...]:
    """Remove the chain rooted at ``root_level`` of item 1 and lift the rest.

    Every chain rooted at item 0 that comes after the removed root in the
    joint order is rebuilt, top root first, with the highest free utility of
    each further item that its root dominates.

    Raises:
        RootNotFound: no chain is rooted at that utility of item 1.
    """
    chains = list(chains)
    target = next(
        (c for c in chains if c.root == 1 and c.level == root_level), None
    )
    if target is None:
        raise RootNotFound(f"no chain rooted at level {root_level} of item 1")
    chains.remove(target)
    cutoff = _root_order(profile, target)

    taken: list[set[int]] = [set() for _ in range(profile.n)]
    for chain in chains:
        for offset, level in enumerate(chain.tail):
            taken[offset + 2].add(level)

    later = sorted(
        (c for c in chains if c.root == 0 and _root_order(profile, c) < cutoff),
        key=lambda c: _root_order(profile, c),
        reverse=True,
    )
    lifted: dict[RootedChain, RootedChain] = {}
    for chain in later:
        tail = []
        for offset, old in enumerate(chain.tail):
            item = offset + 2
            taken[item].discard(old)
            level = _highest_free_dominated(profile, taken[item], item, 0, chain.level)
            new = old if level is None else level
            taken[item].add(new)
            tail.append(new)
        lifted[chain] = RootedChain(0, chain.level, tuple(tail))
    return tuple(lifted.get(c, c) for c in chains)


def free_levels(
    profile: UtilityProfile, chains: Sequence[RootedChain], item: int
) -> tuple[int, ...]:
    """Levels of ``item`` (2 or above) used by none of ``chains``."""
    used = {c.tail[item - 2] for c in chains}
    return tuple(level for level in range(profile.d) if level not in used)
