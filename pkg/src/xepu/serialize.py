"""Deterministic JSON and CSV emission.

Floats are written with 17 significant digits ('%.17g'), which round-trips
IEEE doubles exactly, so identical inputs produce byte-identical files.
The density-matrix wire format is an object with "re" and "im", each a
4x4 row-major array of numbers.
"""

from __future__ import annotations

import json

import numpy as np


def fmt_float(x: float) -> str:
    return "%.17g" % float(x)


def dumps(obj, indent: int = 0) -> str:
    """JSON text with deterministic key order and 17-digit floats."""
    pad = " " * indent
    inner = " " * (indent + 2)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [
            f"{inner}{json.dumps(str(k))}: {dumps(v, indent + 2)}" for k, v in obj.items()
        ]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        flat = all(isinstance(v, (int, float, np.floating, np.integer)) for v in obj)
        if flat:
            return "[" + ", ".join(dumps(v) for v in obj) + "]"
        items = [f"{inner}{dumps(v, indent + 2)}" for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + pad + "]"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return fmt_float(float(obj))
    if obj is None:
        return "null"
    if isinstance(obj, str):
        return json.dumps(obj)
    raise TypeError(f"cannot serialize {type(obj)!r}")


def matrix_to_obj(m: np.ndarray) -> dict:
    a = np.asarray(m, dtype=np.complex128)
    return {"re": a.real.tolist(), "im": a.imag.tolist()}


def obj_to_matrix(obj) -> np.ndarray:
    """Parse the {"re": ..., "im": ...} wire format (extra keys ignored)."""
    try:
        re = np.asarray(obj["re"], dtype=np.float64)
        im = np.asarray(obj["im"], dtype=np.float64)
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed matrix object: {exc}") from exc
    if re.shape != (4, 4) or im.shape != (4, 4):
        raise ValueError(
            f"matrix arrays must be 4x4, got re {re.shape} and im {im.shape}"
        )
    return re + 1j * im


def csv_row(values) -> str:
    parts = []
    for v in values:
        if isinstance(v, (float, np.floating)):
            parts.append(fmt_float(v))
        else:
            parts.append(str(v))
    return ",".join(parts)
