"""Conversion of results to JSON-safe values (no floats, exact integers only)."""

from __future__ import annotations

import enum
import json
from fractions import Fraction

from .qpoly import QPoly
from .weyl import Permutation

SAFE_INT = 2 ** 53


def to_jsonable(obj):
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        return str(obj) if abs(obj) > SAFE_INT else obj
    if isinstance(obj, Fraction):
        return str(obj) if obj.denominator != 1 else to_jsonable(int(obj))
    if isinstance(obj, float):
        raise TypeError("floats are not allowed in JSON output")
    if isinstance(obj, QPoly):
        return {"coeffs": [to_jsonable(c) for c in obj.coeffs]}
    if isinstance(obj, Permutation):
        return list(obj.images)
    if isinstance(obj, enum.Enum):
        return obj.value
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        return [to_jsonable(v) for v in obj]
    if hasattr(obj, "to_dict"):
        return to_jsonable(obj.to_dict())
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(obj) -> str:
    return json.dumps(to_jsonable(obj), indent=2, ensure_ascii=True) + "\n"


def qpoly_from_json(data) -> QPoly:
    return QPoly(int(c) for c in data["coeffs"])
