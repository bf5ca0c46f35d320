"""The Adversary's revenue-minimizing coupling.

Items are processed in ascending price order with the null item first. Each
item in turn roots as much mass as it can in chains where it dominates every
higher-priced item; before moving on, the next item's share of the existing
chains is swapped for its lowest-utility mass so that its high utilities stay
free to root chains of its own.
"""

from __future__ import annotations

import logging
from fractions import Fraction

from ..core.dominance import Candidate, rank
from ..core.working import UtilityNode, WorkingInstance, augment_with_null, processing_order
from ..models.coupling import BestResponse
from ..models.distributions import Instance
from ..models.pricing import Pricing, TieBreakRule
from .evaluate import settle
from .fill import attach_items

logger = logging.getLogger(__name__)

Levels = tuple[int, ...]


class WaterFill:
    """Mass-node state of one best-response computation.

    ``nodes[pos]`` lists the support of the ``pos``-th processed item sorted
    by utility, highest first; a chain stores one level index per processed
    item.
    """

    def __init__(self, work: WorkingInstance, rule: TieBreakRule) -> None:
        self.order = processing_order(work, rule)
        self.nodes: list[list[UtilityNode]] = []
        self.ranks: list[list[tuple]] = []
        for pos in self.order:
            item = work.items[pos]
            nodes = [
                UtilityNode(item.origin, value, value - item.price, prob, prob)
                for value, prob in reversed(item.marginal.support)
            ]
            self.nodes.append(nodes)
            self.ranks.append(
                [rank(Candidate(item.origin, n.utility, item.price), rule) for n in nodes]
            )
        self.chains: list[tuple[Fraction, Levels]] = []

    def run(self) -> list[tuple[Fraction, Levels]]:
        m = len(self.nodes)
        for i in range(m):
            self.root_chains(i)
            if i + 1 < m:
                self.recouple(i + 1)
        self.sweep_leftover()
        return self.chains

    def highest_dominated(self, j: int, bound: tuple) -> int | None:
        for level, node in enumerate(self.nodes[j]):
            if node.remaining > 0 and self.ranks[j][level] < bound:
                return level
        return None

    def lowest_free(self, j: int) -> int:
        for level in range(len(self.nodes[j]) - 1, -1, -1):
            if self.nodes[j][level].remaining > 0:
                return level
        raise AssertionError(f"item at position {j} has no free mass")

    def root_chains(self, i: int) -> None:
        """Form every chain item ``i`` can dominate, best utilities first."""
        m = len(self.nodes)
        before = len(self.chains)
        for k, node in enumerate(self.nodes[i]):
            while node.remaining > 0:
                levels = [0] * m
                levels[i] = k
                for j in range(i + 1, m):
                    level = self.highest_dominated(j, self.ranks[i][k])
                    if level is None:
                        logger.debug(
                            "position %d rooted %d chains", i, len(self.chains) - before
                        )
                        return
                    levels[j] = level
                for j in range(i):
                    levels[j] = self.lowest_free(j)
                mass = min(self.nodes[j][levels[j]].remaining for j in range(m))
                for j in range(m):
                    self.nodes[j][levels[j]].remaining -= mass
                self.chains.append((mass, tuple(levels)))
        logger.debug("position %d rooted %d chains", i, len(self.chains) - before)

    def recouple(self, t: int) -> None:
        """Give the chains item ``t``'s lowest-utility mass, in utility order."""
        nodes = self.nodes[t]
        for mass, levels in self.chains:
            nodes[levels[t]].remaining += mass

        # Ascending utility of item t means descending level index.
        ordered = sorted(self.chains, key=lambda chain: -chain[1][t])
        pieces: dict[Levels, Fraction] = {}
        splits = 0
        ptr = len(nodes) - 1
        for mass, levels in ordered:
            parts = 0
            while mass > 0:
                while nodes[ptr].remaining == 0:
                    ptr -= 1
                take = min(mass, nodes[ptr].remaining)
                nodes[ptr].remaining -= take
                mass -= take
                key = levels[:t] + (ptr,) + levels[t + 1 :]
                pieces[key] = pieces.get(key, Fraction(0)) + take
                parts += 1
            splits += parts - 1
        self.chains = [(mass, levels) for levels, mass in pieces.items()]
        if splits:
            logger.debug("recoupling position %d split %d chains", t, splits)

    def sweep_leftover(self) -> None:
        """Couple any still-free mass, lowest utilities together.

        A full :meth:`run` leaves nothing free, since the last position roots
        all of its remaining mass, so there the sweep does nothing. It only
        acts on a state whose main pass was cut short.
        """
        if not any(node.remaining for nodes in self.nodes for node in nodes):
            return
        logger.warning("free mass left after the main pass; completing by sweep")
        m = len(self.nodes)
        while self.nodes[0] and any(node.remaining for node in self.nodes[0]):
            levels = tuple(self.lowest_free(j) for j in range(m))
            mass = min(self.nodes[j][levels[j]].remaining for j in range(m))
            for j in range(m):
                self.nodes[j][levels[j]].remaining -= mass
            self.chains.append((mass, levels))

    def values(self, levels: Levels) -> dict[int, Fraction]:
        """Original item index -> value for one chain."""
        return {nodes[lvl].item: nodes[lvl].value for nodes, lvl in zip(self.nodes, levels)}


def best_response(inst: Instance, p: Pricing, rule: TieBreakRule) -> BestResponse:
    """A compatible coupling minimizing the revenue of ``p``, with that revenue.

    Items not offered are attached afterwards by :func:`attach_items`; they
    never affect the purchase.
    """
    work = augment_with_null(inst, p)
    fill = WaterFill(work, rule)
    chains = fill.run()
    null = work.null_index
    partial = []
    for mass, levels in chains:
        values = fill.values(levels)
        values.pop(null)
        partial.append((mass, values))
    coupling = attach_items(partial, inst.marginals)
    revenue, sold = settle(p, coupling.chains, rule)
    order = tuple(work.items[pos].origin for pos in fill.order)
    logger.debug("best response revenue %s with %d chains", revenue, len(coupling))
    return BestResponse(coupling, revenue, sold, order)
