"""The lattice of closed subintervals of [0, 1] and operations on it."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Callable, Iterable, Sequence

from .errors import DomainError, PreconditionError
from .pwl import q
from .report import HOLDS, PropertyReport
from .tnorms import T_NORM, ScalarTNorm


@dataclass(frozen=True, order=False)
class Interval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        lo, hi = q(self.lo), q(self.hi)
        if not 0 <= lo <= hi <= 1:
            raise DomainError(f"need 0 <= lo <= hi <= 1, got [{lo}, {hi}]")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @classmethod
    def point(cls, a) -> Interval:
        return cls(a, a)

    @property
    def degenerate(self) -> bool:
        return self.lo == self.hi

    def __str__(self):
        return f"[{self.lo}, {self.hi}]"


TOP = Interval(1, 1)
FULL = Interval(0, 1)

IntervalOp = Callable[[Interval, Interval], Interval]


def meet(x: Interval, y: Interval) -> Interval:
    return Interval(min(x.lo, y.lo), min(x.hi, y.hi))


def join(x: Interval, y: Interval) -> Interval:
    return Interval(max(x.lo, y.lo), max(x.hi, y.hi))


def leq_product(x: Interval, y: Interval) -> bool:
    """Componentwise order: ``x.lo <= y.lo`` and ``x.hi <= y.hi``."""
    return x.lo <= y.lo and x.hi <= y.hi


def subset_order(x: Interval, y: Interval) -> bool:
    """Set inclusion ``x ⊆ y``."""
    return y.lo <= x.lo and x.hi <= y.hi


def circled_star(x: Interval, y: Interval) -> Interval:
    """Largest product of a point of ``x`` and a point of ``y``, as a
    degenerate interval.

    Multiplication is increasing in both arguments on [0, 1], so the box
    maximum sits at the upper corner.
    """
    return Interval.point(x.hi * y.hi)


def circled_star_corners(x: Interval, y: Interval) -> Interval:
    """Brute-force variant of :func:`circled_star` over all four box corners."""
    return Interval.point(max(a * b for a in (x.lo, x.hi) for b in (y.lo, y.hi)))


def convolution_interval_tnorm(op: ScalarTNorm, x: Interval, y: Interval) -> Interval:
    """``[op(x.lo, y.lo), op(x.hi, y.hi)]`` for a t-norm ``op``."""
    if op.family != T_NORM:
        raise PreconditionError(f"{op.name} is not registered as a t-norm")
    return Interval(op(x.lo, y.lo), op(x.hi, y.hi))


def interval_tnorm(op: ScalarTNorm) -> IntervalOp:
    def apply(x, y):
        return convolution_interval_tnorm(op, x, y)

    apply.__name__ = f"interval_{op.name}"
    return apply


def probe_grid(endpoints: Iterable = (0, "1/4", "1/2", "3/4", 1)) -> list[Interval]:
    """Every interval whose endpoints both come from ``endpoints``."""
    pts = sorted({q(e) for e in endpoints})
    return [Interval(a, b) for a in pts for b in pts if a <= b]


INTERVAL_CONDITIONS = ("1", "2", "3", "4", "5", "6", "7", "4'", "5'")


def check_interval_conditions(
    op: IntervalOp,
    probes: Sequence[Interval] | None = None,
    expect: dict[str, str] | None = None,
    name: str = "interval-conditions",
) -> PropertyReport:
    """Run the t-norm conditions (1)-(7) and the monotonicity conditions
    (4') and (5') for an interval operation over all probe tuples.

    ``expect`` maps condition ids to ``"violated"`` for conditions the
    caller expects to fail; by default every condition is expected to hold.
    Scalars for (6) and (7) are the probe endpoints.
    """
    probes = list(probe_grid() if probes is None else probes)
    expect = expect or {}
    scalars = sorted({p.lo for p in probes} | {p.hi for p in probes})
    rep = PropertyReport(name, trials=len(probes))
    for c in INTERVAL_CONDITIONS:
        rep.declare(c, expect.get(c, HOLDS))

    def rec(cond, args, lhs, rhs):
        rep.record(cond, args, lhs == rhs, rhs, lhs, expect.get(cond, HOLDS))

    for x in probes:
        rec("1", (x,), op(TOP, x), x)
    for x, y in product(probes, repeat=2):
        rec("2", (x, y), op(x, y), op(y, x))
    for x, y, z in product(probes, repeat=3):
        xy, xz = op(x, y), op(x, z)
        rec("3", (x, y, z), op(xy, z), op(x, op(y, z)))
        rec("4", (x, y, z), op(x, join(y, z)), join(xy, xz))
        rec("5", (x, y, z), op(x, meet(y, z)), meet(xy, xz))
        if leq_product(x, y):
            yz = op(y, z)
            xz_ = op(x, z)
            rep.record("4'", (x, y, z), leq_product(xz_, yz), f"<= {yz}", xz_, expect.get("4'", HOLDS))
        if subset_order(x, y):
            yz = op(y, z)
            xz_ = op(x, z)
            rep.record("5'", (x, y, z), subset_order(xz_, yz), f"subset of {yz}", xz_, expect.get("5'", HOLDS))
    for a, b in product(scalars, repeat=2):
        if a <= b:
            ab = Interval(a, b)
            rec("6", (ab,), op(FULL, ab), Interval(0, b))
        r = op(Interval.point(a), Interval.point(b))
        rep.record("7", (a, b), r.degenerate, "a point", r, expect.get("7", HOLDS))
    return rep


def single_point_factor_meet(x: Interval, y: Interval) -> int:
    """Index (0 or 1) of an input that is a single point, given that
    ``meet(x, y)`` is one."""
    if not meet(x, y).degenerate:
        raise PreconditionError(f"meet of {x} and {y} is not a single point")
    return _degenerate_index(x, y)


def single_point_factor_join(x: Interval, y: Interval) -> int:
    """Index (0 or 1) of an input that is a single point, given that
    ``join(x, y)`` is one."""
    if not join(x, y).degenerate:
        raise PreconditionError(f"join of {x} and {y} is not a single point")
    return _degenerate_index(x, y)


def _degenerate_index(x, y) -> int:
    if x.degenerate:
        return 0
    if y.degenerate:
        return 1
    raise AssertionError(f"neither {x} nor {y} is a single point")
