"""Canonical JSON used for traces, event logs and protocol messages.

Floats are written with 9 significant digits and key order is the
insertion order of the dict, so identical inputs always produce
byte-identical output. Values created by the engine are quantized with
q9 at the source, which makes parse(serialize(x)) an exact round trip.
"""

from __future__ import annotations

import json
import math
from typing import Any


def f9(value: float) -> str:
    if not math.isfinite(value):
        raise ValueError(f"non-finite float cannot be serialized: {value!r}")
    return format(value, ".9g")


def q9(value: float) -> float:
    """Quantize to the 9 significant digits the wire format carries."""
    return float(f9(value))


def dumps(obj: Any) -> str:
    out: list[str] = []
    _write(obj, out)
    return "".join(out)


def _write(obj: Any, out: list[str]) -> None:
    if obj is None:
        out.append("null")
    elif obj is True:
        out.append("true")
    elif obj is False:
        out.append("false")
    elif isinstance(obj, int):
        out.append(repr(obj))
    elif isinstance(obj, float):
        out.append(f9(obj))
    elif isinstance(obj, str):
        out.append(json.dumps(obj, ensure_ascii=False))
    elif isinstance(obj, (list, tuple)):
        out.append("[")
        for i, item in enumerate(obj):
            if i:
                out.append(",")
            _write(item, out)
        out.append("]")
    elif isinstance(obj, dict):
        out.append("{")
        for i, (key, value) in enumerate(obj.items()):
            if i:
                out.append(",")
            out.append(json.dumps(key, ensure_ascii=False))
            out.append(":")
            _write(value, out)
        out.append("}")
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")
