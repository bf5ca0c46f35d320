"""Terminal views for robustprice."""

from __future__ import annotations

from .tables import coupling_table, render_report, results_table

__all__ = ["coupling_table", "render_report", "results_table"]
