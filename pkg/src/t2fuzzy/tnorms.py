"""Binary operations on [0, 1]: t-norms, t-conorms and their axioms."""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Callable, Sequence

from .errors import UnknownNameError
from .report import PropertyReport

T_NORM = "t-norm"
T_CONORM = "t-conorm"
PLAIN = "plain"

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class ScalarTNorm:
    name: str
    apply: Callable[[Fraction, Fraction], Fraction]
    family: str = T_NORM

    def __post_init__(self):
        if self.family not in (T_NORM, T_CONORM, PLAIN):
            raise ValueError(f"unknown family {self.family!r}")

    def __call__(self, x, y) -> Fraction:
        return self.apply(x, y)

    def as_family(self, family: str) -> ScalarTNorm:
        """Same operation registered under another axiom family."""
        return dataclasses.replace(self, family=family)


def _drastic(x, y):
    if x == 1:
        return y
    if y == 1:
        return x
    return ZERO


def _drastic_sum(x, y):
    if x == 0:
        return y
    if y == 0:
        return x
    return ONE


REGISTRY: dict[str, ScalarTNorm] = {
    op.name: op
    for op in (
        ScalarTNorm("min", min),
        ScalarTNorm("product", lambda x, y: x * y),
        ScalarTNorm("lukasiewicz", lambda x, y: max(ZERO, x + y - 1)),
        ScalarTNorm("drastic", _drastic),
        ScalarTNorm("max", max, T_CONORM),
        ScalarTNorm("probsum", lambda x, y: x + y - x * y, T_CONORM),
        ScalarTNorm("bounded-sum", lambda x, y: min(ONE, x + y), T_CONORM),
        ScalarTNorm("drastic-sum", _drastic_sum, T_CONORM),
    )
}

BUILTIN_TNORMS = ("min", "product", "lukasiewicz", "drastic")


def get_tnorm(name: str) -> ScalarTNorm:
    try:
        return REGISTRY[name]
    except KeyError:
        raise UnknownNameError(
            f"unknown operation {name!r}; known: {', '.join(REGISTRY)}"
        ) from None


def grid(points: int = 21) -> list[Fraction]:
    """``points`` equally spaced rationals from 0 to 1 inclusive."""
    n = points - 1
    return [Fraction(k, n) for k in range(points)]


DEFAULT_PROBES = grid(5)


def check_tnorm_axioms(op: ScalarTNorm, probes: Sequence = DEFAULT_PROBES) -> PropertyReport:
    """Check (T1)-(T3) and the neutral-element axiom of ``op.family`` on probes.

    Every tuple of probes is visited; the first counterexample of each law
    is kept as the witness.
    """
    probes = sorted(set(Fraction(p) for p in probes))
    if not probes:
        raise ValueError("probe list is empty")
    rep = PropertyReport(f"tnorm:{op.name}", trials=len(probes))
    for law in ("range", "T1", "T2", "T3"):
        rep.declare(law)
    for x, y in product(probes, repeat=2):
        v = op(x, y)
        rep.record("range", (x, y), 0 <= v <= 1, "in [0, 1]", v)
        w = op(y, x)
        rep.record("T1", (x, y), v == w, v, w)
    for x, y, z in product(probes, repeat=3):
        a, b = op(op(x, y), z), op(x, op(y, z))
        rep.record("T2", (x, y, z), a == b, a, b)
    for i, x in enumerate(probes):
        for x2 in probes[i:]:
            for y in probes:
                a, b = op(x, y), op(x2, y)
                rep.record("T3", (x, x2, y), a <= b, f"<= {b}", a)
                a, b = op(y, x), op(y, x2)
                rep.record("T3", (y, x, y, x2), a <= b, f"<= {b}", a)
    if op.family in (T_NORM, T_CONORM):
        law, unit = ("T4", ONE) if op.family == T_NORM else ("T4'", ZERO)
        rep.declare(law)
        for x in probes:
            for v in (op(unit, x), op(x, unit)):
                rep.record(law, (x,), v == x, x, v)
    return rep


def unit_preimage_is_corner(op: ScalarTNorm, probes: Sequence = DEFAULT_PROBES) -> PropertyReport:
    """``op(x, y) == 1`` only at ``x == y == 1``, and ``op(1, 1) == 1``.

    Meant for t-norms; other families are checked as given.
    """
    probes = sorted(set(Fraction(p) for p in probes) | {ONE})
    rep = PropertyReport(f"corner:{op.name}", trials=len(probes))
    rep.declare("corner")
    v = op(ONE, ONE)
    rep.record("corner", (ONE, ONE), v == 1, 1, v)
    for x, y in product(probes, repeat=2):
        if op(x, y) == 1:
            rep.record("corner", (x, y), x == 1 and y == 1, "x = y = 1", f"({x}, {y})")
        else:
            rep.record("corner", (x, y), True)
    return rep


def looks_continuous(op: ScalarTNorm, points: int = 65, lipschitz: Fraction = Fraction(2)) -> bool:
    """Sampled heuristic: every step between neighbouring grid points moves
    ``op`` by at most ``lipschitz`` times the step.

    Finitely many samples cannot prove continuity; a ``True`` here only
    means no jump was seen at this resolution.
    """
    g = grid(points)
    h = g[1]
    for i in range(points - 1):
        for y in g:
            if abs(op(g[i + 1], y) - op(g[i], y)) > lipschitz * h:
                return False
            if abs(op(y, g[i + 1]) - op(y, g[i])) > lipschitz * h:
                return False
    return True
