"""JSON codecs for instances, pricings, couplings and reports."""

from __future__ import annotations

import hashlib
import json
from fractions import Fraction
from typing import Any, Mapping, Sequence

from ..constants import FLOAT_DIGITS
from ..core.rational import format_price, format_rational, to_price, to_rational
from ..models.coupling import Chain, Coupling
from ..models.distributions import Instance, Item, Marginal
from ..models.errors import ParseError, ValidationError
from ..models.pricing import Pricing
from ..models.report import PricingReport


def _rational(raw: object, where: str) -> Fraction:
    try:
        return to_rational(raw)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"not a rational: {raw!r}", where) from exc


# Instances


def instance_to_dict(inst: Instance) -> dict[str, Any]:
    return {
        "items": [
            {
                "name": item.name,
                "support": [
                    {"value": format_rational(v), "prob": format_rational(p)}
                    for v, p in item.marginal.support
                ],
            }
            for item in inst.items
        ]
    }


def instance_from_dict(data: object, source: str = "instance") -> Instance:
    """Decode ``{"items": [{"name", "support": [{"value", "prob"}]}]}``.

    Raises:
        ParseError: wrong shape, located by JSON path.
        ValidationError: a marginal or the instance breaks an invariant.
    """
    if not isinstance(data, Mapping) or not isinstance(data.get("items"), list):
        raise ParseError("expected an object with an 'items' list", source)
    items = []
    for i, raw in enumerate(data["items"]):
        where = f"{source}: items[{i}]"
        if not isinstance(raw, Mapping) or not isinstance(raw.get("support"), list):
            raise ParseError("expected an object with a 'support' list", where)
        name = str(raw.get("name", f"item{i + 1}"))
        pairs = []
        for k, entry in enumerate(raw["support"]):
            at = f"{where}.support[{k}]"
            if not isinstance(entry, Mapping) or "value" not in entry or "prob" not in entry:
                raise ParseError("expected {'value', 'prob'}", at)
            value = _rational(entry["value"], at + ".value")
            pairs.append((value, _rational(entry["prob"], at + ".prob")))
        try:
            items.append(Item(name, Marginal.of(pairs)))
        except ValidationError as exc:
            exc.add_note(f"at {where}")
            raise
    try:
        return Instance(tuple(items))
    except ValidationError as exc:
        exc.add_note(f"at {source}")
        raise


# Pricings


def pricing_to_json(p: Pricing) -> dict[str, Any]:
    return {"prices": [format_price(price) for price in p]}


def pricing_from_json(data: object, source: str = "pricing") -> Pricing:
    """Accept ``{"prices": [...]}`` or a bare list; ``"inf"`` means not offered."""
    raw = data.get("prices") if isinstance(data, Mapping) else data
    if not isinstance(raw, list):
        raise ParseError("expected a list of prices or {'prices': [...]}", source)
    prices = []
    for i, entry in enumerate(raw):
        try:
            prices.append(to_price(entry))
        except (TypeError, ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"not a price: {entry!r}", f"{source}: prices[{i}]") from exc
    try:
        return Pricing(tuple(prices))
    except ValidationError as exc:
        exc.add_note(f"at {source}")
        raise


# Couplings


def coupling_to_list(c: Coupling) -> list[dict[str, Any]]:
    return [
        {
            "mass": format_rational(chain.mass),
            "values": [format_rational(v) for v in chain.values],
        }
        for chain in c
    ]


def coupling_from_list(data: object, source: str = "coupling") -> Coupling:
    """Decode a list of ``{"mass", "values"}`` chains, merging duplicates."""
    if isinstance(data, Mapping):
        data = data.get("chains")
    if not isinstance(data, list):
        raise ParseError("expected a list of chains", source)
    chains = []
    for k, raw in enumerate(data):
        where = f"{source}: [{k}]"
        if not isinstance(raw, Mapping) or not isinstance(raw.get("values"), list):
            raise ParseError("expected {'mass', 'values': [...]}", where)
        mass = _rational(raw.get("mass"), where + ".mass")
        values = tuple(
            _rational(v, f"{where}.values[{i}]") for i, v in enumerate(raw["values"])
        )
        chains.append(Chain(mass, values))
    return Coupling.merged(chains)


# Reports


def approx(x: Fraction) -> float:
    return round(float(x), FLOAT_DIGITS)


def rational_fields(**values: Fraction) -> dict[str, Any]:
    """Each rational as a string plus a rounded ``<name>_approx`` float."""
    out: dict[str, Any] = {}
    for name, value in values.items():
        out[name] = format_rational(value)
        out[f"{name}_approx"] = approx(value)
    return out


def pricing_report_fields(report: PricingReport) -> dict[str, Any]:
    return {
        "label": report.label,
        "pricing": pricing_to_json(report.pricing)["prices"],
        **rational_fields(
            robust_revenue=report.robust_revenue,
            comonotonic_revenue=report.comonotonic_revenue,
            myerson_sum_bound=report.myerson_sum_bound,
        ),
        "evaluated": report.evaluated,
    }


def canonical_json(data: Any) -> str:
    return json.dumps(data, sort_keys=True, separators=(",", ":"))


def digest(*parts: Any) -> str:
    """sha256 over the canonical JSON of ``parts``."""
    return hashlib.sha256(canonical_json(list(parts)).encode("utf-8")).hexdigest()


def dumps(data: Any) -> str:
    return json.dumps(data, indent=2)


def parse_rationals(values: Sequence[object], source: str) -> tuple[Fraction, ...]:
    return tuple(_rational(v, f"{source}[{i}]") for i, v in enumerate(values))
