"""Command handlers: one ``run_*`` function per subcommand."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from fractions import Fraction
from typing import Any, Callable

from rich.console import Console

from .adversary import best_response, revenue_of_coupling
from .config import Settings
from .constants import FLOAT_DIGITS, HALF
from .core.rational import format_rational
from .generators import (
    discretize_exponential,
    discretize_uniform,
    gen_identical_eqrev,
    gen_mis,
    gen_truncated_eqrev,
    load_graph,
    max_independent_set,
    mis_lower_bound,
    mis_upper_bound,
)
from .models.coupling import BestResponse
from .models.distributions import Instance
from .models.errors import ParseError
from .models.pricing import TieBreakRule
from .models.report import PricingReport, Report
from .oracle import max_prefix_sale_prob, min_revenue_bruteforce
from .pricing import (
    comonotonic_welfare,
    half_threshold_pricing,
    max_median_single_price,
    mhr_factor,
    robust_revenue,
    search_maxmin,
)
from .utils.files import (
    parse_candidates,
    parse_coupling,
    parse_instance,
    parse_pricing,
    write_json,
)
from .utils.serialization import (
    coupling_to_list,
    digest,
    dumps,
    instance_to_dict,
    pricing_report_fields,
    pricing_to_json,
    rational_fields,
)
from .views import render_report

logger = logging.getLogger(__name__)

Handler = Callable[[argparse.Namespace, Settings], Report]

__all__ = ["HANDLERS", "emit"]


def _rule(args: argparse.Namespace) -> TieBreakRule:
    return TieBreakRule.parse(args.tie_break)


def _flags(args: argparse.Namespace) -> dict[str, str]:
    return {"tie_break": args.tie_break}


def _sale_fields(inst: Instance, br: BestResponse) -> dict[str, Any]:
    names = list(inst.names) + ["<none>"]
    return {
        "sale_prob": {name: format_rational(prob) for name, prob in zip(names, br.sale_prob)},
        "order": [names[i] for i in br.order],
    }


def _report(
    command: str,
    inputs: dict[str, str],
    payload: list[Any],
    results: dict[str, Any],
    witness: list[dict[str, Any]] | None = None,
    **extra: Any,
) -> Report:
    return Report(
        command=command,
        inputs=inputs,
        digest=digest(command, payload),
        results=results,
        witness=witness,
        extra=extra,
    )


def _pricing_report(
    command: str,
    args: argparse.Namespace,
    inst: Instance,
    report: PricingReport,
    *,
    inputs: dict[str, Any] | None = None,
    payload: Any = None,
    results: dict[str, Any] | None = None,
) -> Report:
    files = {"instance": str(args.instance)}
    files.update({key: str(value) for key, value in (inputs or {}).items()})
    return _report(
        command,
        files,
        [instance_to_dict(inst), _flags(args), payload],
        {**pricing_report_fields(report), **(results or {})},
        coupling_to_list(report.witness) if args.witness else None,
        names=inst.names,
    )


def run_best_response(args: argparse.Namespace, settings: Settings) -> Report:
    inst = parse_instance(args.instance)
    p = parse_pricing(args.pricing)
    br = best_response(inst, p, _rule(args))
    return _report(
        "best-response",
        {"instance": str(args.instance), "pricing": str(args.pricing)},
        [instance_to_dict(inst), pricing_to_json(p), _flags(args)],
        {**rational_fields(revenue=br.revenue), **_sale_fields(inst, br)},
        coupling_to_list(br.coupling) if args.witness else None,
        names=inst.names,
    )


def run_revenue(args: argparse.Namespace, settings: Settings) -> Report:
    inst = parse_instance(args.instance)
    p = parse_pricing(args.pricing)
    c = parse_coupling(args.coupling)
    br = revenue_of_coupling(inst, p, c, _rule(args))
    return _report(
        "revenue",
        {
            "instance": str(args.instance),
            "pricing": str(args.pricing),
            "coupling": str(args.coupling),
        },
        [instance_to_dict(inst), pricing_to_json(p), coupling_to_list(c), _flags(args)],
        {**rational_fields(revenue=br.revenue), **_sale_fields(inst, br)},
        coupling_to_list(c) if args.witness else None,
        names=inst.names,
    )


def run_report(args: argparse.Namespace, settings: Settings) -> Report:
    inst = parse_instance(args.instance)
    p = parse_pricing(args.pricing)
    report = robust_revenue(inst, p, _rule(args))
    return _pricing_report(
        "report",
        args,
        inst,
        report,
        inputs={"pricing": args.pricing},
        payload=pricing_to_json(p),
    )


def run_price_mhr(args: argparse.Namespace, settings: Settings) -> Report:
    inst = parse_instance(args.instance)
    report = robust_revenue(inst, max_median_single_price(inst), _rule(args))
    welfare = comonotonic_welfare(inst)
    return _pricing_report(
        "price mhr",
        args,
        inst,
        report,
        results={
            **rational_fields(comonotonic_welfare=welfare),
            "mhr_factor": round(mhr_factor(HALF), FLOAT_DIGITS),
        },
    )


def _parse_set(text: str, n: int) -> list[int]:
    """1-based comma list to 0-based indices."""
    if not text.strip():
        return []
    try:
        chosen = [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError as exc:
        raise ParseError(f"bad item list {text!r}", "--set") from exc
    for i in chosen:
        if not 1 <= i <= n:
            raise ParseError(f"item {i} outside 1..{n}", "--set")
    return [i - 1 for i in chosen]


def run_price_half_threshold(args: argparse.Namespace, settings: Settings) -> Report:
    inst = parse_instance(args.instance)
    selected = _parse_set(args.set, len(inst))
    p = half_threshold_pricing([m.max_value for m in inst.marginals], selected)
    report = robust_revenue(inst, p, _rule(args))
    return _pricing_report(
        "price half-threshold", args, inst, report, payload=sorted(selected)
    )


def run_search(args: argparse.Namespace, settings: Settings) -> Report:
    inst = parse_instance(args.instance)
    candidates = parse_candidates(args.candidates, len(inst)) if args.candidates else None
    report = search_maxmin(
        inst,
        candidates,
        args.max_distinct,
        _rule(args),
        budget=settings.search_budget,
        jobs=settings.jobs,
    )
    grid = None
    if candidates is not None:
        grid = [[format_rational(c) for c in cands] for cands in candidates]
    return _pricing_report(
        "search",
        args,
        inst,
        report,
        inputs={"candidates": args.candidates or "<support values>"},
        payload=[grid, args.max_distinct],
    )


def _gen_report(
    command: str, args: argparse.Namespace, document: dict[str, Any], params: dict[str, Any]
) -> Report:
    items = document["items"]
    results: dict[str, Any] = {
        "items": len(items),
        "support_sizes": [len(item["support"]) for item in items],
    }
    if "truncation" in document:
        results["truncation"] = document["truncation"]
    if args.output:
        write_json(args.output, document)
        results["output"] = str(args.output)
    inputs = {key: str(value) for key, value in params.items()}
    logger.info("%s: %d items", command, len(items))
    return _report(command, inputs, [document], results, document=document)


def run_gen_mis(args: argparse.Namespace, settings: Settings) -> Report:
    graph = load_graph(args.graph)
    document = instance_to_dict(gen_mis(graph))
    return _gen_report("gen mis", args, document, {"graph": args.graph})


def run_gen_eqrev(args: argparse.Namespace, settings: Settings) -> Report:
    build = gen_identical_eqrev if args.identical else gen_truncated_eqrev
    family = build(args.n, args.grid, settings.precision)
    document = instance_to_dict(family.instance)
    document["truncation"] = [format_rational(t) for t in family.truncation]
    params = {"n": args.n, "grid": args.grid, "identical": args.identical}
    return _gen_report("gen eqrev", args, document, params)


def _parse_bounds(text: str) -> tuple[Fraction, Fraction]:
    lo, sep, hi = text.partition(":")
    if not sep:
        raise ParseError(f"expected a:b, got {text!r}", "--bounds")
    try:
        return Fraction(lo), Fraction(hi)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"expected a:b, got {text!r}", "--bounds") from exc


def run_gen_uniform(args: argparse.Namespace, settings: Settings) -> Report:
    marginals = [discretize_uniform(*_parse_bounds(b), args.m) for b in args.bounds]
    document = instance_to_dict(Instance.from_marginals(marginals))
    params = {"bounds": " ".join(args.bounds), "m": args.m}
    return _gen_report("gen uniform", args, document, params)


def run_gen_exp(args: argparse.Namespace, settings: Settings) -> Report:
    if args.median:
        marginals = [
            discretize_exponential(
                m=args.m, q_cap=args.q_cap, median=mu, precision=settings.precision
            )
            for mu in args.median
        ]
        params: dict[str, Any] = {"median": " ".join(args.median)}
    else:
        marginals = [
            discretize_exponential(rate, args.m, args.q_cap, precision=settings.precision)
            for rate in args.rate
        ]
        params = {"rate": " ".join(args.rate)}
    document = instance_to_dict(Instance.from_marginals(marginals))
    params.update(m=args.m, q_cap=args.q_cap)
    return _gen_report("gen exp", args, document, params)


def run_oracle_min(args: argparse.Namespace, settings: Settings) -> Report:
    inst = parse_instance(args.instance)
    p = parse_pricing(args.pricing)
    rule = _rule(args)
    revenue, witness = min_revenue_bruteforce(
        inst, p, rule, d_cap=settings.d_cap, budget=settings.coupling_budget
    )
    adversary = best_response(inst, p, rule).revenue
    return _report(
        "oracle min",
        {"instance": str(args.instance), "pricing": str(args.pricing)},
        [instance_to_dict(inst), pricing_to_json(p), _flags(args)],
        {
            **rational_fields(revenue=revenue, best_response=adversary),
            "agrees": revenue == adversary,
        },
        coupling_to_list(witness) if args.witness else None,
        names=inst.names,
    )


def run_oracle_prefix(args: argparse.Namespace, settings: Settings) -> Report:
    inst = parse_instance(args.instance)
    p = parse_pricing(args.pricing)
    rule = _rule(args)
    best = max_prefix_sale_prob(
        inst, p, rule, args.length, d_cap=settings.d_cap, budget=settings.coupling_budget
    )
    realized = best_response(inst, p, rule).prefix_sale_prob(args.length)
    return _report(
        "oracle prefix",
        {"instance": str(args.instance), "pricing": str(args.pricing)},
        [instance_to_dict(inst), pricing_to_json(p), _flags(args), args.length],
        {
            "length": args.length,
            **rational_fields(max_sale_prob=best, best_response_sale_prob=realized),
            "agrees": best == realized,
        },
        names=inst.names,
    )


def run_bounds_mis(args: argparse.Namespace, settings: Settings) -> Report:
    n, m_size = args.n, args.m
    if args.graph:
        graph = load_graph(args.graph)
        n = graph.n
        m_size = len(max_independent_set(graph))
    if n is None or m_size is None:
        raise ParseError("give --n and --m, or --graph", "bounds mis")
    s_size = m_size if args.s is None else args.s
    results = {
        "n": n,
        "s": s_size,
        "m": m_size,
        **rational_fields(
            lower_bound=mis_lower_bound(s_size, n), upper_bound=mis_upper_bound(m_size, n)
        ),
    }
    inputs = {"graph": str(args.graph or "")}
    return _report("bounds mis", inputs, [n, s_size, m_size], results)


HANDLERS: dict[str, Handler] = {
    "best-response": run_best_response,
    "revenue": run_revenue,
    "report": run_report,
    "price mhr": run_price_mhr,
    "price half-threshold": run_price_half_threshold,
    "search": run_search,
    "gen mis": run_gen_mis,
    "gen eqrev": run_gen_eqrev,
    "gen uniform": run_gen_uniform,
    "gen exp": run_gen_exp,
    "oracle min": run_oracle_min,
    "oracle prefix": run_oracle_prefix,
    "bounds mis": run_bounds_mis,
}


def emit(report: Report, fmt: str, console: Console | None = None) -> None:
    """Write a report to stdout as JSON or as a rich table.

    ``gen`` commands without ``--output`` print the generated instance
    itself so that it can be piped straight into another command.
    """
    document = report.extra.get("document")
    if fmt == "json":
        raw = document is not None and "output" not in report.results
        data = document if raw else report.to_dict()
        sys.stdout.write(dumps(data) + "\n")
        return
    console = console or Console()
    console.print(render_report(report, report.extra.get("names", ())))
    if document is not None and "output" not in report.results:
        console.print_json(json.dumps(document))
