"""Reading and writing robustprice input files."""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any

from ..models.coupling import Coupling
from ..models.distributions import Instance
from ..models.errors import ParseError
from ..models.pricing import Pricing
from .serialization import (
    coupling_from_list,
    dumps,
    instance_from_dict,
    parse_rationals,
    pricing_from_json,
)


def read_json(path: str | Path) -> Any:
    """Load JSON with decimals read as exact Fractions.

    Raises:
        FileNotFoundError: ``path`` does not exist.
        ParseError: the file is not valid JSON; located by line and column.
    """
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    try:
        return json.loads(text, parse_float=Fraction)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, f"{path}:{exc.lineno}:{exc.colno}") from exc


def write_json(path: str | Path, data: Any) -> None:
    Path(path).write_text(dumps(data) + "\n", encoding="utf-8")


def parse_instance(path: str | Path) -> Instance:
    return instance_from_dict(read_json(path), str(path))


def parse_pricing(path: str | Path) -> Pricing:
    return pricing_from_json(read_json(path), str(path))


def parse_coupling(path: str | Path) -> Coupling:
    return coupling_from_list(read_json(path), str(path))


def parse_candidates(path: str | Path, n_items: int) -> tuple[tuple[Fraction, ...], ...]:
    """Candidate prices: one shared list, or one list per item.

    Both bare lists and ``{"candidates": ...}`` are accepted.
    """
    data = read_json(path)
    if isinstance(data, dict):
        data = data.get("candidates")
    source = str(path)
    if not isinstance(data, list):
        raise ParseError("expected a list of candidate prices", source)
    if data and all(isinstance(entry, list) for entry in data):
        if len(data) != n_items:
            raise ParseError(f"{len(data)} candidate lists for {n_items} items", source)
        return tuple(parse_rationals(entry, f"{source}: [{i}]") for i, entry in enumerate(data))
    shared = parse_rationals(data, source)
    return (shared,) * n_items
