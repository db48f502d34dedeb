"""Instance files and report documents (JSON text with a canonical layout).

Canonical instance layout, one key per line and one matrix row per line::

    {
      "kind": "knapsack",
      "m": 1,
      "n": 3,
      "A": [
        [3, 4, 5]
      ],
      "b": [10],
      "c": [3, 4, 5],
      "u": [1, 1, 1],
      "meta": {"delta": 5}
    }

Standard-form files carry ``"lo"`` before ``"u"``; there ``u`` is the upper
bound vector.
"""

from __future__ import annotations

import json
from pathlib import Path

from .core import KnapsackInstance, SolveReport, StandardFormInstance

KINDS = ("knapsack", "standard")


class InstanceFormatError(ValueError):
    pass


def _ints(v) -> str:
    return "[" + ", ".join(str(int(x)) for x in v) + "]"


def serialize_instance(instance, meta: dict | None = None) -> str:
    if isinstance(instance, KnapsackInstance):
        kind, upper = "knapsack", instance.u
    elif isinstance(instance, StandardFormInstance):
        kind, upper = "standard", instance.up
    else:
        raise TypeError(f"not an instance: {type(instance).__name__}")
    rows = ",\n".join("    " + _ints(row) for row in instance.A)
    lines = [
        "{",
        f'  "kind": "{kind}",',
        f'  "m": {instance.m},',
        f'  "n": {instance.n},',
        '  "A": [',
        rows,
        "  ],",
        f'  "b": {_ints(instance.b)},',
        f'  "c": {_ints(instance.c)},',
    ]
    if kind == "standard":
        lines.append(f'  "lo": {_ints(instance.lo)},')
    lines.append(f'  "u": {_ints(upper)},')
    lines.append(f'  "meta": {json.dumps(meta or {}, sort_keys=True)}')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _int_list(doc, key, length):
    v = doc.get(key)
    if not isinstance(v, list) or any(isinstance(x, bool) or not isinstance(x, int) for x in v):
        raise InstanceFormatError(f"{key!r} must be a list of integers")
    if len(v) != length:
        raise InstanceFormatError(f"{key!r} has length {len(v)}, expected {length}")
    return v


def parse_instance(text: str):
    """Parse instance text; returns ``(instance, meta)``."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceFormatError(f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise InstanceFormatError("top level must be an object")
    kind = doc.get("kind")
    if kind not in KINDS:
        raise InstanceFormatError(f"kind must be one of {KINDS}")
    m, n = doc.get("m"), doc.get("n")
    if not isinstance(m, int) or not isinstance(n, int) or m < 1 or n < 1:
        raise InstanceFormatError("m and n must be positive integers")
    A = doc.get("A")
    if not isinstance(A, list) or len(A) != m:
        raise InstanceFormatError(f"'A' must have {m} rows")
    A = [_int_list({"A row": row}, "A row", n) for row in A]
    b = _int_list(doc, "b", m)
    c = _int_list(doc, "c", n)
    u = _int_list(doc, "u", n)
    meta = doc.get("meta", {})
    if not isinstance(meta, dict):
        raise InstanceFormatError("'meta' must be an object")
    if kind == "knapsack":
        return KnapsackInstance(A, b, c, u), meta
    lo = _int_list(doc, "lo", n)
    return StandardFormInstance(A, b, c, lo, u), meta


def read_instance(path):
    return parse_instance(Path(path).read_text())


def write_instance(path, instance, meta=None) -> None:
    Path(path).write_text(serialize_instance(instance, meta))


def report_document(report: SolveReport) -> str:
    doc = {
        "mode": report.mode,
        "status": report.status,
        "value": report.value,
        "witness": None if report.witness is None else list(report.witness),
        "stats": report.stats,
    }
    return json.dumps(doc, indent=2, default=str) + "\n"
