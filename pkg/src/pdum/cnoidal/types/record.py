"""Deterministic machine-readable output for the command-line interface."""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Mapping

import numpy as np

from .constants import FLOAT_DIGITS


def format_real(value: float, *, digits: int = FLOAT_DIGITS) -> str:
    """Format a real with ``digits`` significant digits (``nan``/``inf`` spelled out)."""

    value = float(value)
    if math.isnan(value):
        return "nan"
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    return format(value, f".{digits}g")


class _Raw(str):
    """A pre-formatted JSON number."""


def _normalize(obj: Any) -> Any:
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, (float, np.floating)):
        value = float(obj)
        return _Raw(format_real(value)) if math.isfinite(value) else None
    if isinstance(obj, Enum):
        return str(obj.value) if not isinstance(obj.value, tuple) else obj.value[0]
    if isinstance(obj, Mapping):
        return {str(k): _normalize(v) for k, v in obj.items()}
    if isinstance(obj, np.ndarray):
        return [_normalize(v) for v in obj.tolist()]
    if isinstance(obj, (list, tuple)):
        return [_normalize(v) for v in obj]
    return str(obj)


def _dump(obj: Any, indent: int = 0) -> str:
    pad = "  " * indent
    inner = "  " * (indent + 1)
    if isinstance(obj, _Raw):
        return str(obj)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{inner}{json.dumps(k)}: {_dump(obj[k], indent + 1)}" for k in sorted(obj)]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(obj, list):
        if not obj:
            return "[]"
        if all(not isinstance(v, (dict, list)) for v in obj):
            return "[" + ", ".join(_dump(v, indent + 1) for v in obj) + "]"
        return "[\n" + ",\n".join(inner + _dump(v, indent + 1) for v in obj) + "\n" + pad + "]"
    return json.dumps(obj)


@dataclass(frozen=True)
class OutputRecord:
    """Result of one CLI command.

    Attributes
    ----------
    command : str
        Subcommand name.
    inputs : dict[str, Any]
        Parsed inputs.
    results : dict[str, Any]
        Reals, vectors and nested maps produced by the command.
    diagnostics : list[str]
        Warnings, root counts, representation choices.
    columns : tuple[str, ...]
        Column names for CSV output.
    rows : list[tuple]
        Rows for CSV output. When empty, CSV falls back to ``key,value`` pairs of ``results``.
    """

    command: str
    inputs: dict[str, Any]
    results: dict[str, Any]
    diagnostics: list[str] = field(default_factory=list)
    columns: tuple[str, ...] = ()
    rows: list[tuple[Any, ...]] = field(default_factory=list)

    def to_json(self) -> str:
        """Serialise with sorted keys and 17-significant-digit reals."""

        payload = {
            "command": self.command,
            "inputs": self.inputs,
            "results": self.results,
            "diagnostics": list(self.diagnostics),
        }
        return _dump(_normalize(payload)) + "\n"

    def to_csv(self) -> str:
        """Serialise as CSV with a header row and LF line endings."""

        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        if self.rows:
            writer.writerow(self.columns)
            for row in self.rows:
                writer.writerow([_csv_cell(v) for v in row])
        else:
            writer.writerow(("key", "value"))
            for key, value in _flatten(self.results):
                writer.writerow((key, _csv_cell(value)))
        return buffer.getvalue()

    def render(self, fmt: str) -> str:
        """Serialise in ``fmt`` (``json`` or ``csv``)."""

        if fmt == "csv":
            return self.to_csv()
        return self.to_json()


def _csv_cell(value: Any) -> str:
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return format_real(float(value))
    return str(value)


def _flatten(results: Mapping[str, Any], prefix: str = "") -> list[tuple[str, Any]]:
    rows: list[tuple[str, Any]] = []
    for key in sorted(results):
        value = results[key]
        name = f"{prefix}{key}"
        if isinstance(value, Mapping):
            rows.extend(_flatten(value, prefix=f"{name}."))
        elif isinstance(value, (list, tuple, np.ndarray)) and not isinstance(value, str):
            rows.extend((f"{name}[{i}]", v) for i, v in enumerate(value))
        else:
            rows.append((name, value))
    return rows


__all__ = ["OutputRecord", "format_real"]
