"""JSON wire formats for capacities, functions and results.

Capacity::

    {"points": ["x1", ...], "mu": [{"set": [0, 2], "value": 4.0}, ...]}

Function::

    {"values": [2, -2, 1, -1]}

Sets are strictly ascending 0-based index lists and the empty set is
omitted.  Exact values are written as decimal strings (``"p/q"`` when the
expansion does not terminate); floats are written with ``repr``, which
round-trips bit-for-bit.
"""

from __future__ import annotations

import json
from fractions import Fraction
from importlib import resources
from pathlib import Path

from .core import (
    Capacity,
    FiniteSpace,
    PanintError,
    RealFunction,
    members,
    subset_index,
    to_exact,
    to_float,
    validate_capacity,
)


def format_number(x):
    if isinstance(x, Fraction):
        return _fraction_str(x)
    if isinstance(x, int) and not isinstance(x, bool):
        return str(x)
    if x is None:
        return None
    return float(x)


def _fraction_str(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    d = x.denominator
    twos = fives = 0
    while d % 2 == 0:
        d //= 2
        twos += 1
    while d % 5 == 0:
        d //= 5
        fives += 1
    if d != 1:
        return f"{x.numerator}/{x.denominator}"
    places = max(twos, fives)
    scaled = abs(x.numerator) * 10**places // x.denominator
    sign = "-" if x < 0 else ""
    digits = str(scaled).rjust(places + 1, "0")
    return f"{sign}{digits[:-places]}.{digits[-places:]}"


def parse_number(x, exact: bool):
    if isinstance(x, bool):
        raise PanintError(f"expected a number, got {x!r}")
    return to_exact(x) if exact else to_float(x)


def _flat(obj) -> bool:
    if isinstance(obj, dict):
        return all(not isinstance(v, (dict, list)) or (isinstance(v, list) and _flat(v)) for v in obj.values())
    if isinstance(obj, list):
        return all(not isinstance(v, (dict, list)) for v in obj)
    return True


def _render(obj, indent: int) -> str:
    if _flat(obj):
        return json.dumps(obj, allow_nan=False)
    pad = "  " * (indent + 1)
    if isinstance(obj, list):
        items = [pad + _render(v, indent + 1) for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + "  " * indent + "]"
    items = [pad + json.dumps(k) + ": " + _render(v, indent + 1) for k, v in obj.items()]
    return "{\n" + ",\n".join(items) + "\n" + "  " * indent + "}"


def dumps(obj) -> str:
    """Deterministic JSON: nested containers indented, flat records on one line."""
    return _render(obj, 0) + "\n"


def _load_json(source):
    if isinstance(source, (dict, list)):
        return source
    try:
        text = Path(source).read_text()
    except OSError as exc:
        raise PanintError(f"cannot read {source}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise PanintError(f"{source}: invalid JSON ({exc})") from exc


def capacity_from_json(data, exact: bool = True) -> Capacity:
    data = _load_json(data)
    if not isinstance(data, dict) or "points" not in data or "mu" not in data:
        raise PanintError('capacity JSON needs "points" and "mu"')
    space = FiniteSpace(tuple(data["points"]))
    table = {}
    for entry in data["mu"]:
        pts = entry.get("set")
        if not isinstance(pts, list) or not pts:
            raise PanintError(f"bad set entry {entry!r}: need a nonempty index list")
        if any(not isinstance(i, int) for i in pts) or any(b <= a for a, b in zip(pts, pts[1:])):
            raise PanintError(f"set {pts} must be strictly ascending integers")
        if pts[0] < 0 or pts[-1] >= space.n:
            raise PanintError(f"set {pts} out of range for {space.n} points")
        s = subset_index(pts)
        if s in table:
            raise PanintError(f"duplicate entry for set {pts}")
        table[s] = parse_number(entry.get("value"), exact)
    return validate_capacity(table, space, exact=exact)


def capacity_to_json(mu: Capacity) -> dict:
    return {
        "points": list(mu.space.labels),
        "mu": [
            {"set": members(s), "value": format_number(mu[s])}
            for s in range(1, mu.space.full + 1)
        ],
    }


def function_from_json(data, space: FiniteSpace, exact: bool = True) -> RealFunction:
    data = _load_json(data)
    if isinstance(data, dict):
        data = data.get("values")
    if not isinstance(data, list):
        raise PanintError('function JSON needs a "values" list')
    return RealFunction(space, tuple(parse_number(v, exact) for v in data))


def function_to_json(f: RealFunction) -> dict:
    return {"values": [format_number(v) for v in f]}


def fixture_path(name: str) -> Path:
    """Path of a bundled golden fixture, e.g. ``golden4.capacity.json``."""
    return Path(str(resources.files("panint") / "data" / name))
