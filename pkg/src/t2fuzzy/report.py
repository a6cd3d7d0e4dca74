"""Outcome records for property-suite runs."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any

HOLDS = "holds"
VIOLATED = "violated"


def encode_arg(arg) -> dict:
    """Tag-and-serialize one law argument so a witness can be replayed."""
    from .document import serialize_function, format_interval
    from .intervals import Interval
    from .pwl import PiecewiseFn

    if isinstance(arg, PiecewiseFn):
        return {"function": serialize_function(arg)}
    if isinstance(arg, Interval):
        return {"interval": format_interval(arg)}
    if isinstance(arg, Fraction):
        return {"rational": str(arg)}
    if isinstance(arg, int):
        return {"rational": str(arg)}
    if isinstance(arg, str):
        return {"name": arg}
    raise TypeError(f"cannot encode witness argument of type {type(arg).__name__}")


def decode_arg(obj: dict):
    from .document import function_from_json, parse_interval

    (kind, payload), = obj.items()
    if kind == "function":
        return function_from_json(payload)
    if kind == "interval":
        return parse_interval(payload)
    if kind == "rational":
        return Fraction(payload)
    if kind == "name":
        return payload
    raise ValueError(f"unknown witness tag {kind!r}")


@dataclass
class LawResult:
    """Tally for one law.

    ``expect`` is ``"holds"`` for laws the theory guarantees and
    ``"violated"`` for counter-claims, which pass only once a witness has
    been found.
    """

    law: str
    expect: str = HOLDS
    checked: int = 0
    violations: int = 0
    witness: list | None = None
    expected: str | None = None
    actual: str | None = None

    @property
    def passed(self) -> bool:
        if self.expect == HOLDS:
            return self.violations == 0
        return self.violations > 0

    def to_dict(self) -> dict[str, Any]:
        return {
            "law": self.law,
            "expect": self.expect,
            "status": "PASS" if self.passed else "FAIL",
            "checked": self.checked,
            "violations": self.violations,
            "witness": self.witness,
            "expected": self.expected,
            "actual": self.actual,
        }


@dataclass
class PropertyReport:
    suite: str
    seed: int | None = None
    trials: int = 0
    config: dict[str, Any] = field(default_factory=dict)
    laws: dict[str, LawResult] = field(default_factory=dict)

    def declare(self, law: str, expect: str = HOLDS) -> LawResult:
        if law not in self.laws:
            self.laws[law] = LawResult(law, expect)
        return self.laws[law]

    def record(self, law, args, holds, expected="", actual="", expect=HOLDS):
        res = self.declare(law, expect)
        res.checked += 1
        if not holds:
            res.violations += 1
            if res.witness is None:
                res.witness = [encode_arg(a) for a in args]
                res.expected = str(expected)
                res.actual = str(actual)

    @property
    def failures(self) -> list[LawResult]:
        return [r for r in self.laws.values() if not r.passed]

    @property
    def passed(self) -> bool:
        return not self.failures

    def merge(self, other: PropertyReport, prefix: str = "") -> None:
        for name, res in other.laws.items():
            res.law = prefix + name
            self.laws[prefix + name] = res

    def witness_document(self, law: str) -> dict:
        res = self.laws[law]
        return {
            "suite": self.suite,
            "seed": self.seed,
            "law": law,
            "expect": res.expect,
            "args": res.witness,
            "expected": res.expected,
            "actual": res.actual,
        }

    def write_witnesses(self, directory) -> dict[str, Path]:
        """Persist every recorded witness as JSON; returns law -> path."""
        directory = Path(directory)
        directory.mkdir(parents=True, exist_ok=True)
        paths = {}
        for name, res in self.laws.items():
            if res.witness is None:
                continue
            safe = "".join(c if c.isalnum() or c in "-_." else "_" for c in name)
            path = directory / f"{self.suite}--{safe}.json"
            path.write_text(json.dumps(self.witness_document(name), indent=2) + "\n")
            paths[name] = path
        return paths

    def to_text(self, witness_paths: dict | None = None) -> str:
        lines = [
            f"# suite: {self.suite}",
            f"# seed: {self.seed}",
            f"# trials: {self.trials}",
        ]
        if self.config:
            cfg = " ".join(f"{k}={v}" for k, v in sorted(self.config.items()))
            lines.append(f"# generator: {cfg}")
        for res in self.laws.values():
            if res.witness is None:
                where = "-"
            elif witness_paths and res.law in witness_paths:
                where = str(witness_paths[res.law])
            else:
                where = json.dumps(res.witness, separators=(",", ":"))
            lines.append(
                f"{res.law}\t{'PASS' if res.passed else 'FAIL'}\texpect={res.expect}"
                f"\tchecked={res.checked}\tviolations={res.violations}\twitness={where}"
            )
        lines.append(f"# result: {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines) + "\n"

    def to_jsonl(self) -> str:
        head = {
            "suite": self.suite,
            "seed": self.seed,
            "trials": self.trials,
            "generator": self.config,
        }
        rows = [json.dumps(head, sort_keys=True)]
        rows += [json.dumps(r.to_dict(), sort_keys=True) for r in self.laws.values()]
        rows.append(json.dumps({"result": "PASS" if self.passed else "FAIL"}))
        return "\n".join(rows) + "\n"
