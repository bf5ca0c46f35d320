"""Rich tables for command reports."""

from __future__ import annotations

from typing import Any, Sequence

from rich import box
from rich.console import Group
from rich.panel import Panel
from rich.table import Table
from rich.text import Text

from ..models.report import Report


def _cell(value: Any) -> Text:
    if isinstance(value, (list, tuple)):
        return Text(", ".join(str(v) for v in value))
    if isinstance(value, dict):
        return Text("; ".join(f"{k}={v}" for k, v in value.items()))
    return Text(str(value))


def results_table(results: dict[str, Any]) -> Table:
    """Two-column table; ``*_approx`` mirrors are folded into their exact value."""
    table = Table(box=box.SIMPLE_HEAVY, show_header=True, header_style="bold cyan")
    table.add_column("field", style="bold")
    table.add_column("value")
    table.add_column("≈", justify="right", style="dim")
    for key, value in results.items():
        if key.endswith("_approx"):
            continue
        mirror = results.get(f"{key}_approx")
        table.add_row(key, _cell(value), "" if mirror is None else f"{mirror:.4f}")
    return table


def coupling_table(witness: Sequence[dict[str, Any]], names: Sequence[str]) -> Table:
    table = Table(box=box.MINIMAL, show_header=True, header_style="bold magenta")
    table.add_column("mass", justify="right")
    for name in names:
        table.add_column(name, justify="right")
    for chain in witness:
        table.add_row(chain["mass"], *(str(v) for v in chain["values"]))
    return table


def render_report(report: Report, names: Sequence[str] = ()) -> Panel:
    """Panel with the results table and, when present, the witness coupling."""
    parts: list[Any] = [results_table(report.results)]
    if report.witness:
        width = len(report.witness[0]["values"])
        columns = list(names) or [f"#{i + 1}" for i in range(width)]
        parts.append(Text("witness coupling", style="bold"))
        parts.append(coupling_table(report.witness, columns))
    subtitle = f"{report.elapsed_seconds:.3f}s  sha256 {report.digest[:12]}"
    return Panel(Group(*parts), title=report.command, subtitle=subtitle, box=box.ROUNDED)
