"""The comonotonic coupling: equal quantiles move together."""

from __future__ import annotations

from fractions import Fraction

from ..core.quantiles import cumulative, quantile
from ..models.coupling import Chain, Coupling
from ..models.distributions import Instance


def comonotonic_coupling(inst: Instance) -> Coupling:
    """One chain per cell between consecutive CDF breakpoints of all items.

    The chain for cell ``(lo, hi]`` has mass ``hi - lo`` and gives every item
    its quantile at ``hi``.
    """
    cuts = sorted({Fraction(0)} | {c for m in inst.marginals for c in cumulative(m)})
    chains = [
        Chain(hi - lo, tuple(quantile(m, hi) for m in inst.marginals))
        for lo, hi in zip(cuts, cuts[1:])
    ]
    return Coupling.merged(chains)
