"""Rendering of reports as tables, JSON and CSV."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any

from rich.console import Console
from rich.table import Table

from ringcode.core.bounds import BoundReport
from ringcode.utils.helpers import format_rational

FORMATS = ("table", "json", "csv")


@dataclass
class Document:
    """One command's output: `rows` feed tables and CSV, `payload` feeds JSON."""

    title: str
    rows: list[dict[str, Any]] = field(default_factory=list)
    payload: dict[str, Any] = field(default_factory=dict)
    footer: list[str] = field(default_factory=list)


def render_cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, (Fraction, int)):
        return format_rational(value)
    if isinstance(value, (list, tuple)):
        return " ".join(render_cell(v) for v in value)
    return str(value)


def _json_default(value: Any) -> Any:
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, (set, frozenset, tuple)):
        return sorted(value) if isinstance(value, (set, frozenset)) else list(value)
    if hasattr(value, "to_dict"):
        return value.to_dict()
    if hasattr(value, "item"):
        return value.item()
    raise TypeError(f"cannot serialize {type(value).__name__}")


def emit_json(document: Document) -> str:
    return json.dumps(document.payload, indent=2, ensure_ascii=False, default=_json_default) + "\n"


def emit_csv(document: Document) -> str:
    if not document.rows:
        return ""
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=list(document.rows[0]), lineterminator="\n")
    writer.writeheader()
    for row in document.rows:
        writer.writerow({key: render_cell(value) for key, value in row.items()})
    return buffer.getvalue()


def emit_table(document: Document, width: int = 120) -> str:
    """Aligned plain-text table; no colour codes so output is stable."""
    table = Table(title=document.title)
    columns = list(document.rows[0]) if document.rows else []
    for column in columns:
        table.add_column(column, style="cyan" if column == columns[0] else None)
    for row in document.rows:
        table.add_row(*(render_cell(row.get(column)) for column in columns))

    buffer = io.StringIO()
    console = Console(file=buffer, width=width, no_color=True, highlight=False, force_terminal=False, emoji=False)
    console.print(table)
    for line in document.footer:
        console.print(line, markup=False)
    return buffer.getvalue()


def emit(document: Document, fmt: str = "table", width: int = 120) -> str:
    if fmt == "json":
        return emit_json(document)
    if fmt == "csv":
        return emit_csv(document)
    if fmt == "table":
        return emit_table(document, width=width)
    raise ValueError(f"unknown format {fmt!r}; expected one of {', '.join(FORMATS)}")


def write_output(text: str, path: str | Path) -> Path:
    """Write rendered output, creating parent directories."""
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text)
    except OSError as e:
        raise OSError(f"cannot write {path}: {e.strerror}") from e
    return path


def bound_row(report: BoundReport) -> dict[str, Any]:
    """Table/CSV row of a bound; inapplicable bounds show `n/a (reason)`."""
    if report.applicable:
        value = f"{report.relation} {format_rational(report.value)}"
        integer = report.integer_bound
    else:
        value = f"n/a ({report.reason})"
        integer = None
    return {
        "bound": report.name,
        "n": report.params.get("n"),
        "d": report.params.get("d", report.params.get("M")),
        "value": value,
        "integer": integer,
        "note": report.note,
    }
