"""Utility functions for robustprice."""

from __future__ import annotations

from .files import (
    parse_candidates,
    parse_coupling,
    parse_instance,
    parse_pricing,
    read_json,
    write_json,
)
from .log import configure_logging
from .serialization import (
    canonical_json,
    coupling_from_list,
    coupling_to_list,
    digest,
    instance_from_dict,
    instance_to_dict,
    pricing_from_json,
    pricing_to_json,
)

__all__ = [
    "parse_candidates",
    "parse_coupling",
    "parse_instance",
    "parse_pricing",
    "read_json",
    "write_json",
    "configure_logging",
    "canonical_json",
    "coupling_from_list",
    "coupling_to_list",
    "digest",
    "instance_from_dict",
    "instance_to_dict",
    "pricing_from_json",
    "pricing_to_json",
]
