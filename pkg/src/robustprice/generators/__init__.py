"""Instance families and discretizers."""

from __future__ import annotations

from .discretize import discretize_exponential, discretize_uniform, gen_uniform_gap
from .eqrev import EqRevFamily, gen_identical_eqrev, gen_truncated_eqrev, truncated_eqrev
from .graphs import Graph, independent_sets, load_graph, max_independent_set
from .mis import gen_mis, is_pricing, mis_lower_bound, mis_upper_bound

__all__ = [
    "discretize_exponential",
    "discretize_uniform",
    "gen_uniform_gap",
    "EqRevFamily",
    "gen_identical_eqrev",
    "gen_truncated_eqrev",
    "truncated_eqrev",
    "Graph",
    "independent_sets",
    "load_graph",
    "max_independent_set",
    "gen_mis",
    "is_pricing",
    "mis_lower_bound",
    "mis_upper_bound",
]
