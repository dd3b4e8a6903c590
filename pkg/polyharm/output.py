"""Deterministic CSV and JSON artifacts."""

from __future__ import annotations

import csv
import io
import json
import math
import sys
import tempfile
from pathlib import Path
from typing import Any

import numpy as np


def format_value(value: Any) -> Any:
    """Plain JSON-compatible scalar; non-finite floats become strings."""
    if isinstance(value, (np.bool_, bool)):
        return bool(value)
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, (np.floating, float)):
        value = float(value)
        if math.isnan(value):
            return "nan"
        if math.isinf(value):
            return "inf" if value > 0 else "-inf"
        return value
    if isinstance(value, Path):
        return str(value)
    return value


def flatten_row(row: dict[str, Any]) -> dict[str, Any]:
    """Split complex entries into ``<name>_re`` and ``<name>_im`` columns."""
    flat: dict[str, Any] = {}
    for key, value in row.items():
        if isinstance(value, (complex, np.complexfloating)):
            flat[f"{key}_re"] = format_value(value.real)
            flat[f"{key}_im"] = format_value(value.imag)
        else:
            flat[key] = format_value(value)
    return flat


def _cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def render_csv(rows: list[dict[str, Any]], meta: dict[str, Any] | None = None) -> str:
    """CSV text with meta columns first; the header is the union of keys in first-seen order."""
    meta = {key: format_value(value) for key, value in (meta or {}).items()}
    flat = [{**meta, **flatten_row(row)} for row in rows]
    columns: list[str] = list(meta)
    for row in flat:
        for key in row:
            if key not in columns:
                columns.append(key)

    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    for row in flat:
        writer.writerow([_cell(row.get(key)) for key in columns])
    return buffer.getvalue()


def _jsonable(value: Any) -> Any:
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, (complex, np.complexfloating)):
        return [format_value(value.real), format_value(value.imag)]
    return format_value(value)


def render_json(rows: list[dict[str, Any]] | dict[str, Any], meta: dict[str, Any] | None = None) -> str:
    """JSON text ``{"meta": ..., "rows": ...}`` with complex values as [re, im]."""
    document = {"meta": _jsonable(meta or {}), "rows": _jsonable(rows)}
    return json.dumps(document, indent=2, allow_nan=False) + "\n"


def write_artifact(
    rows: list[dict[str, Any]],
    *,
    path: Path | None,
    fmt: str,
    meta: dict[str, Any] | None = None,
) -> None:
    """Write rows to ``path`` as UTF-8 CSV or JSON, or to stdout when path is None."""
    text = render_csv(rows, meta) if fmt == "csv" else render_json(rows, meta)
    if path is None:
        sys.stdout.write(text)
        return
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")


def check_writable(path: Path | None) -> None:
    """Raise OSError when ``path`` cannot be written; a missing file is not created."""
    if path is None:
        return
    if path.is_dir():
        raise IsADirectoryError(f"{path} is a directory")
    if path.exists():
        with open(path, "a", encoding="utf-8"):
            pass
        return
    parent = path.parent if str(path.parent) else Path(".")
    parent.mkdir(parents=True, exist_ok=True)
    with tempfile.NamedTemporaryFile(dir=parent, prefix=f".{path.name}.", delete=True):
        pass
