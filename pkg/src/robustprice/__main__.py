"""Command-line interface for robustprice."""

from __future__ import annotations

import argparse
import sys
import time
from typing import NoReturn, Sequence

from .app import HANDLERS, emit
from .config import Settings
from .constants import LOG_PREFIX
from .models.errors import RobustPriceError
from .models.pricing import TieBreakRule
from .utils.log import configure_logging

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_FAILURE = 2


class UsageError(Exception):
    """Bad command line; carries argparse's message."""


class ArgumentParser(argparse.ArgumentParser):
    """argparse parser that raises instead of exiting with status 2."""

    def error(self, message: str) -> NoReturn:
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def _common() -> argparse.ArgumentParser:
    common = ArgumentParser(add_help=False)
    common.add_argument(
        "--tie-break",
        choices=[rule.value for rule in TieBreakRule],
        default=TieBreakRule.HIGHER_PRICE_FIRST.value,
        help="buyer tie-breaking between equal utilities (default: high-price)",
    )
    common.add_argument("--format", choices=("json", "table"), default="json")
    common.add_argument("--witness", action="store_true", help="include the coupling")
    common.add_argument("--budget", type=int, help="enumeration budget (couplings or pricings)")
    common.add_argument("--log-level", help="DEBUG, INFO, WARNING or ERROR")
    return common


def build_parser() -> ArgumentParser:
    common = _common()
    parser = ArgumentParser(
        prog="robustprice",
        description="Correlation-robust pricing: worst-case couplings, bounds and search.",
    )
    commands = parser.add_subparsers(dest="command", required=True, parser_class=ArgumentParser)

    def command(sub: argparse._SubParsersAction, name: str, text: str) -> ArgumentParser:
        return sub.add_parser(name, help=text, parents=[common])

    cmd = command(commands, "best-response", "worst-case coupling and revenue of a pricing")
    cmd.add_argument("instance")
    cmd.add_argument("pricing")

    cmd = command(commands, "revenue", "revenue of a pricing under a given coupling")
    cmd.add_argument("instance")
    cmd.add_argument("pricing")
    cmd.add_argument("coupling")

    cmd = command(commands, "report", "robust revenue with comonotonic and Myerson bounds")
    cmd.add_argument("instance")
    cmd.add_argument("pricing")

    price = commands.add_parser("price", help="pricing rules").add_subparsers(
        dest="rule", required=True, parser_class=ArgumentParser
    )
    cmd = command(price, "mhr", "single price at the largest median")
    cmd.add_argument("instance")
    cmd = command(price, "half-threshold", "half of each item's top value for a set of items")
    cmd.add_argument("instance")
    cmd.add_argument("--set", required=True, help="1-based items, e.g. 1,3")

    cmd = command(commands, "search", "best robust revenue over a price grid")
    cmd.add_argument("instance")
    cmd.add_argument("--max-distinct", type=int, help="at most this many distinct prices")
    cmd.add_argument("--candidates", help="JSON list of prices, shared or per item")
    cmd.add_argument("--jobs", type=int, help="worker processes")

    gen = commands.add_parser("gen", help="instance generators").add_subparsers(
        dest="family", required=True, parser_class=ArgumentParser
    )
    cmd = command(gen, "mis", "instance encoding an independent-set problem")
    cmd.add_argument("graph", help="edge list, one 'u v' per line, 1-indexed")
    cmd = command(gen, "eqrev", "truncated equal-revenue family")
    cmd.add_argument("--n", type=int, required=True)
    cmd.add_argument("--grid", type=int, required=True)
    cmd.add_argument("--identical", action="store_true", help="n copies truncated at 2^(n+1)")
    cmd = command(gen, "uniform", "discretized uniform marginals")
    cmd.add_argument("--bounds", nargs="+", required=True, metavar="A:B")
    cmd.add_argument("--m", type=int, required=True)
    cmd = command(gen, "exp", "discretized exponential marginals")
    rates = cmd.add_mutually_exclusive_group(required=True)
    rates.add_argument("--rate", nargs="+")
    rates.add_argument("--median", nargs="+")
    cmd.add_argument("--m", type=int, required=True)
    cmd.add_argument("--q-cap", default="99/100")
    for family in ("mis", "eqrev", "uniform", "exp"):
        gen.choices[family].add_argument("--output", help="write the instance here")

    oracle = commands.add_parser("oracle", help="brute-force checks").add_subparsers(
        dest="check", required=True, parser_class=ArgumentParser
    )
    cmd = command(oracle, "min", "minimum revenue over all perfect couplings")
    cmd.add_argument("instance")
    cmd.add_argument("pricing")
    cmd = command(oracle, "prefix", "maximum sale probability of a price-order prefix")
    cmd.add_argument("instance")
    cmd.add_argument("pricing")
    cmd.add_argument("--length", type=int, required=True)

    bounds = commands.add_parser("bounds", help="closed-form bounds").add_subparsers(
        dest="kind", required=True, parser_class=ArgumentParser
    )
    cmd = command(bounds, "mis", "revenue bounds of independent-set instances")
    cmd.add_argument("--graph", help="edge list; sets --n and --m")
    cmd.add_argument("--n", type=int)
    cmd.add_argument("--s", type=int, help="independent set size (default: --m)")
    cmd.add_argument("--m", type=int, help="maximum independent set size")

    return parser


def _handler_key(args: argparse.Namespace) -> str:
    sub = getattr(args, "rule", None) or getattr(args, "family", None)
    sub = sub or getattr(args, "check", None) or getattr(args, "kind", None)
    return f"{args.command} {sub}" if sub else args.command


def _settings(args: argparse.Namespace) -> Settings:
    settings = Settings.from_env()
    budget = args.budget
    return settings.replace(
        coupling_budget=budget,
        search_budget=budget,
        jobs=getattr(args, "jobs", None),
        log_level=args.log_level,
    )


def execute(argv: Sequence[str] | None = None) -> int:
    """Run one command and return its exit code."""
    args_list = list(argv) if argv is not None else sys.argv[1:]
    try:
        args = build_parser().parse_args(args_list)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE

    try:
        settings = _settings(args)
        configure_logging(settings.log_level)
    except ValueError as exc:
        print(f"{LOG_PREFIX} {exc}", file=sys.stderr)
        return EXIT_USAGE

    handler = HANDLERS[_handler_key(args)]
    started = time.perf_counter()
    try:
        report = handler(args, settings)
    except FileNotFoundError as exc:
        print(f"{LOG_PREFIX} File not found: {exc.filename}", file=sys.stderr)
        return EXIT_FAILURE
    except (RobustPriceError, ValueError) as exc:
        print(f"{LOG_PREFIX} {type(exc).__name__}: {exc}", file=sys.stderr)
        for note in getattr(exc, "__notes__", ()):
            print(f"{LOG_PREFIX}   {note}", file=sys.stderr)
        return EXIT_FAILURE
    report.elapsed_seconds = time.perf_counter() - started
    emit(report, args.format)
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> None:
    """CLI entrypoint invoked via `python -m robustprice` or project scripts."""
    sys.exit(execute(argv))


if __name__ == "__main__":
    main()
