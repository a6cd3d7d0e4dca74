"""Text formats: function documents (JSON) and bracketed intervals.

A function document looks like::

    {
      "name": "tent",
      "breakpoints": [
        {"x": "0", "value": "0"},
        {"x": "1/2", "value": "1"},
        {"x": "1", "value": "1/2"}
      ]
    }

Coordinates and grades are ``"p/q"`` strings, decimal strings, or bare JSON
numbers; all are converted to exact rationals from their literal text.
``left``/``right`` are optional and default to ``value``; they must be
absent at ``x = 0`` and ``x = 1`` respectively.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

from .errors import DocumentError, DomainError
from .intervals import Interval
from .pwl import PiecewiseFn, from_breakpoints

_RATIONAL = re.compile(r"^\s*[+-]?(\d+(/\d+)?|\d*\.\d+|\d+\.\d*)\s*$")


def parse_rational(text, position=None) -> Fraction:
    if isinstance(text, Fraction):
        return text
    if isinstance(text, bool) or not isinstance(text, (str, int)):
        raise DocumentError(f"expected a rational, got {text!r}", position)
    s = str(text)
    if not _RATIONAL.match(s):
        raise DocumentError(f"not a rational: {s!r}", position)
    try:
        return Fraction(s.strip())
    except ZeroDivisionError:
        raise DocumentError(f"zero denominator in {s!r}", position) from None


def _exact_number(literal: str) -> Fraction:
    return Fraction(literal)


def function_from_json(obj) -> PiecewiseFn:
    """Build a function from an already-decoded document object."""
    if not isinstance(obj, dict):
        raise DocumentError("document must be a JSON object")
    bps = obj.get("breakpoints")
    if not isinstance(bps, list) or len(bps) < 2:
        raise DocumentError("'breakpoints' must be a list with at least two records")
    records = []
    prev = None
    last = len(bps) - 1
    for i, rec in enumerate(bps):
        pos = f"breakpoints[{i}]"
        if not isinstance(rec, dict):
            raise DocumentError("record must be an object", pos)
        unknown = set(rec) - {"x", "left", "value", "right"}
        if unknown:
            raise DocumentError(f"unknown field(s) {sorted(unknown)}", pos)
        if "x" not in rec or "value" not in rec:
            raise DocumentError("record needs 'x' and 'value'", pos)
        x = parse_rational(rec["x"], pos)
        if prev is not None and x <= prev:
            raise DocumentError(f"x = {x} not greater than previous x = {prev} (unsorted x)", pos)
        if i == 0 and x != 0:
            raise DocumentError("first x must be 0", pos)
        if i == last and x != 1:
            raise DocumentError("last x must be 1", pos)
        if i == 0 and "left" in rec:
            raise DocumentError("the record at x = 0 cannot carry 'left'", pos)
        if i == last and "right" in rec:
            raise DocumentError("the record at x = 1 cannot carry 'right'", pos)
        grades = {}
        for key in ("left", "value", "right"):
            if key in rec:
                g = parse_rational(rec[key], f"{pos}.{key}")
                if not 0 <= g <= 1:
                    raise DocumentError(f"grade {g} out of range [0, 1]", f"{pos}.{key}")
                grades[key] = g
        records.append((x, grades.get("left"), grades["value"], grades.get("right")))
        prev = x
    try:
        return from_breakpoints(records)
    except DomainError as exc:
        raise DocumentError(str(exc)) from None


def parse_function(text: str) -> PiecewiseFn:
    """Parse a function document; errors carry a line/column or record position."""
    try:
        obj = json.loads(text, parse_float=_exact_number, parse_int=_exact_number)
    except json.JSONDecodeError as exc:
        raise DocumentError(exc.msg, f"line {exc.lineno} column {exc.colno}") from None
    return function_from_json(obj)


def document_name(text: str) -> str | None:
    try:
        obj = json.loads(text, parse_float=_exact_number, parse_int=_exact_number)
    except json.JSONDecodeError:
        return None
    return obj.get("name") if isinstance(obj, dict) else None


def serialize_function(f: PiecewiseFn, name: str | None = None) -> dict:
    out = []
    for bp in f.breakpoints:
        rec = {"x": str(bp.x)}
        if bp.left is not None:
            rec["left"] = str(bp.left)
        rec["value"] = str(bp.value)
        if bp.right is not None:
            rec["right"] = str(bp.right)
        out.append(rec)
    doc = {"breakpoints": out}
    if name is not None:
        doc = {"name": name, **doc}
    return doc


def dumps_function(f: PiecewiseFn, name: str | None = None) -> str:
    doc = serialize_function(f, name)
    rows = ",\n".join("    " + json.dumps(r) for r in doc["breakpoints"])
    head = f'  "name": {json.dumps(name)},\n' if name is not None else ""
    return "{\n" + head + '  "breakpoints": [\n' + rows + "\n  ]\n}\n"


_INTERVAL = re.compile(r"^\s*\[\s*([^,\]]+?)\s*,\s*([^,\]]+?)\s*\]\s*$")


def parse_interval(text: str) -> Interval:
    """Parse ``"[p/q, r/s]"``; a bare rational means a degenerate interval."""
    m = _INTERVAL.match(text)
    try:
        if m:
            return Interval(parse_rational(m.group(1)), parse_rational(m.group(2)))
        a = parse_rational(text.strip())
        return Interval(a, a)
    except DomainError as exc:
        raise DocumentError(str(exc)) from None


def format_interval(x: Interval) -> str:
    return f"[{x.lo}, {x.hi}]"
