"""Deterministic JSON and CSV emission.

Floats are printed with 17 significant digits, enough to round-trip any IEEE
double exactly, so repeated runs produce byte-identical output. Only finite
numbers are allowed on the wire.
"""

from __future__ import annotations

import json
import math


def format_float(value: float) -> str:
    if not math.isfinite(value):
        raise ValueError(f"cannot serialize non-finite value {value}")
    return format(float(value), ".17g")


def _render(obj, indent: int) -> str:
    pad = " " * indent
    inner = " " * (indent + 2)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [
            f"{inner}{json.dumps(str(key))}: {_render(value, indent + 2)}"
            for key, value in obj.items()
        ]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        items = [f"{inner}{_render(value, indent + 2)}" for value in obj]
        return "[\n" + ",\n".join(items) + "\n" + pad + "]"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if obj is None:
        return "null"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return format_float(obj)
    if isinstance(obj, str):
        return json.dumps(obj)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(obj) -> str:
    """Pretty JSON with full-precision floats and stable key order."""
    return _render(obj, 0) + "\n"


def csv_line(values) -> str:
    parts = []
    for value in values:
        if isinstance(value, bool):
            parts.append("true" if value else "false")
        elif isinstance(value, float):
            parts.append(format_float(value))
        else:
            parts.append(str(value))
    return ",".join(parts)
