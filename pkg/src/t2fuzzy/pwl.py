"""Exact piecewise-linear functions on [0, 1] with jump discontinuities.

A :class:`PiecewiseFn` is stored as an increasing list of breakpoints
``0 = x_0 < x_1 < ... < x_n = 1``.  Each breakpoint carries its point value
together with the left and right limits of the function there, so that
characteristic functions of points and intervals are represented exactly.
Between two consecutive breakpoints the function is the straight line from
the right limit at the left breakpoint to the left limit at the right one.

All coordinates and grades are :class:`fractions.Fraction`; nothing in this
module touches floating point.  Values are kept in canonical form (no
removable breakpoints) so that ``==`` decides equality of functions.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from heapq import merge
from typing import Callable, Iterable, NamedTuple, Sequence

from .errors import DomainError, EmptyIntervalError, NotInLError, NotNormalError

ZERO = Fraction(0)
ONE = Fraction(1)

__all__ = [
    "BalanceData",
    "Breakpoint",
    "PiecewiseFn",
    "Sup",
    "agreement_bounds",
    "balance_data",
    "constant",
    "convex_profile",
    "eval_at",
    "from_breakpoints",
    "indicator",
    "is_convex",
    "is_normal",
    "left_envelope",
    "leq",
    "limits_at",
    "pointwise_max",
    "pointwise_min",
    "polyline",
    "q",
    "reflect",
    "right_envelope",
    "singleton",
    "sup_on",
    "weak_left_envelope",
    "weak_right_envelope",
    "with_value_at",
]


def q(value) -> Fraction:
    """Convert ``value`` to an exact :class:`Fraction`.

    Strings may be ``"p/q"`` or terminating decimals.  Floats go through
    their shortest ``repr`` so ``0.1`` becomes ``1/10`` rather than the
    binary expansion.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(repr(value))
    if isinstance(value, Decimal):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot convert {type(value).__name__} to Fraction")


def _fmt(v: Fraction) -> str:
    return str(v)


class Breakpoint(NamedTuple):
    x: Fraction
    left: Fraction | None
    value: Fraction
    right: Fraction | None


class Sup(NamedTuple):
    value: Fraction
    attained: bool


@dataclass(frozen=True)
class PiecewiseFn:
    """An element of Map(I, I) from the piecewise-linear-with-jumps class.

    Do not call the constructor directly; use :func:`from_breakpoints` or
    one of the named constructors.  Internally ``lefts[0] == values[0]`` and
    ``rights[-1] == values[-1]`` so that the hot paths need no ``None``
    checks; :attr:`breakpoints` exposes the missing limits as ``None``.
    """

    xs: tuple[Fraction, ...]
    lefts: tuple[Fraction, ...]
    values: tuple[Fraction, ...]
    rights: tuple[Fraction, ...]

    @property
    def breakpoints(self) -> tuple[Breakpoint, ...]:
        n = len(self.xs)
        return tuple(
            Breakpoint(
                self.xs[i],
                None if i == 0 else self.lefts[i],
                self.values[i],
                None if i == n - 1 else self.rights[i],
            )
            for i in range(n)
        )

    def __call__(self, x) -> Fraction:
        return eval_at(self, x)

    def __str__(self) -> str:
        parts = []
        for bp in self.breakpoints:
            left = "" if bp.left is None else _fmt(bp.left)
            right = "" if bp.right is None else _fmt(bp.right)
            parts.append(f"{_fmt(bp.x)}:{left}|{_fmt(bp.value)}|{right}")
        return "[" + ", ".join(parts) + "]"

    def __repr__(self) -> str:
        return f"PiecewiseFn({self})"


# -- construction -----------------------------------------------------------


def _canonical(xs, ls, vs, rs) -> PiecewiseFn:
    """Drop removable interior breakpoints and freeze."""
    n = len(xs)
    keep = [0]
    for i in range(1, n - 1):
        v = vs[i]
        if ls[i] == v and rs[i] == v:
            j = keep[-1]
            # collinear with the kept left neighbour and the next point
            if (v - rs[j]) * (xs[i + 1] - xs[i]) == (ls[i + 1] - v) * (xs[i] - xs[j]):
                continue
        keep.append(i)
    keep.append(n - 1)
    if len(keep) == n:
        return PiecewiseFn(tuple(xs), tuple(ls), tuple(vs), tuple(rs))
    return PiecewiseFn(
        tuple(xs[i] for i in keep),
        tuple(ls[i] for i in keep),
        tuple(vs[i] for i in keep),
        tuple(rs[i] for i in keep),
    )


def from_breakpoints(points: Iterable) -> PiecewiseFn:
    """Build a function from ``(x, left, value, right)`` records.

    ``left``/``right`` may be ``None`` to mean "equal to value" (continuity);
    at ``x = 0`` the left limit and at ``x = 1`` the right limit must be
    ``None``.  Raises :class:`DomainError` on any invariant violation.
    """
    xs, ls, vs, rs = [], [], [], []
    for rec in points:
        x, left, value, right = rec
        x, value = q(x), q(value)
        left = value if left is None else q(left)
        right = value if right is None else q(right)
        xs.append(x)
        ls.append(left)
        vs.append(value)
        rs.append(right)
    if len(xs) < 2:
        raise DomainError("need at least the breakpoints 0 and 1")
    if xs[0] != 0 or xs[-1] != 1:
        raise DomainError("first breakpoint must be 0 and last must be 1")
    for i in range(1, len(xs)):
        if xs[i] <= xs[i - 1]:
            raise DomainError(f"breakpoints not strictly increasing at index {i}")
    if ls[0] != vs[0]:
        raise DomainError("no left limit exists at x = 0")
    if rs[-1] != vs[-1]:
        raise DomainError("no right limit exists at x = 1")
    for seq in (ls, vs, rs):
        for g in seq:
            if not 0 <= g <= 1:
                raise DomainError(f"grade {g} outside [0, 1]")
    return _canonical(xs, ls, vs, rs)


def constant(c) -> PiecewiseFn:
    c = q(c)
    return from_breakpoints([(0, None, c, None), (1, None, c, None)])


def polyline(vertices: Sequence) -> PiecewiseFn:
    """Continuous function through ``(x, y)`` vertices starting at 0 and ending at 1."""
    return from_breakpoints([(x, None, y, None) for x, y in vertices])


def indicator(a, b) -> PiecewiseFn:
    """Characteristic function of the closed interval ``[a, b]``."""
    a, b = q(a), q(b)
    if not 0 <= a <= b <= 1:
        raise DomainError(f"need 0 <= a <= b <= 1, got [{a}, {b}]")
    xs = sorted({ZERO, a, b, ONE})
    pts = []
    for x in xs:
        value = ONE if a <= x <= b else ZERO
        left = ONE if a < x <= b else ZERO
        right = ONE if a <= x < b else ZERO
        pts.append((x, left if x > 0 else None, value, right if x < 1 else None))
    return from_breakpoints(pts)


def singleton(x) -> PiecewiseFn:
    """Characteristic function of ``{x}``."""
    return indicator(x, x)


def with_value_at(f: PiecewiseFn, x, value) -> PiecewiseFn:
    """Copy of ``f`` with the point value at ``x`` replaced (limits unchanged)."""
    x, value = q(x), q(value)
    xs, ls, vs, rs = _sample(f, _merge(f.xs, (x,)))
    i = xs.index(x)
    vs[i] = value
    if i == 0:
        ls[0] = value
    if i == len(xs) - 1:
        rs[-1] = value
    return _canonical(xs, ls, vs, rs)


# -- evaluation -------------------------------------------------------------


def _check_point(x) -> Fraction:
    x = q(x)
    if not 0 <= x <= 1:
        raise DomainError(f"x = {x} outside [0, 1]")
    return x


def _interp(f: PiecewiseFn, i: int, x: Fraction) -> Fraction:
    x0, x1 = f.xs[i], f.xs[i + 1]
    r, l = f.rights[i], f.lefts[i + 1]
    return r + (l - r) * (x - x0) / (x1 - x0)


def limits_at(f: PiecewiseFn, x) -> tuple[Fraction, Fraction, Fraction]:
    """Return ``(left limit, value, right limit)`` of ``f`` at ``x``.

    At 0 the left limit and at 1 the right limit are reported equal to the
    point value.
    """
    x = _check_point(x)
    i = bisect_left(f.xs, x)
    if f.xs[i] == x:
        return f.lefts[i], f.values[i], f.rights[i]
    v = _interp(f, i - 1, x)
    return v, v, v


def eval_at(f: PiecewiseFn, x) -> Fraction:
    return limits_at(f, x)[1]


def _merge(a: Sequence[Fraction], b: Iterable[Fraction]) -> list[Fraction]:
    out = []
    for x in merge(a, sorted(b)):
        if not out or out[-1] != x:
            out.append(x)
    return out


def _sample(f: PiecewiseFn, xs: Sequence[Fraction]):
    """Limits and values of ``f`` on a sorted superset of its breakpoints."""
    ls, vs, rs = [], [], []
    fx = f.xs
    j = 0
    for x in xs:
        while fx[j] < x:
            j += 1
        if fx[j] == x:
            ls.append(f.lefts[j])
            vs.append(f.values[j])
            rs.append(f.rights[j])
        else:
            v = _interp(f, j - 1, x)
            ls.append(v)
            vs.append(v)
            rs.append(v)
    return list(xs), ls, vs, rs


def _crossings(xs, fl, fr, gl, gr) -> list[Fraction]:
    """Interior points where two linear pieces on a common partition cross."""
    out = []
    for i in range(len(xs) - 1):
        d0 = fr[i] - gr[i]
        d1 = fl[i + 1] - gl[i + 1]
        if (d0 < 0 < d1) or (d1 < 0 < d0):
            out.append(xs[i] + d0 / (d0 - d1) * (xs[i + 1] - xs[i]))
    return out


def _common(f: PiecewiseFn, g: PiecewiseFn, split_crossings: bool):
    xs = _merge(f.xs, g.xs)
    _, fl, fv, fr = _sample(f, xs)
    _, gl, gv, gr = _sample(g, xs)
    if split_crossings:
        extra = _crossings(xs, fl, fr, gl, gr)
        if extra:
            xs = _merge(xs, extra)
            _, fl, fv, fr = _sample(f, xs)
            _, gl, gv, gr = _sample(g, xs)
    return xs, (fl, fv, fr), (gl, gv, gr)


def _combine(f: PiecewiseFn, g: PiecewiseFn, pick: Callable) -> PiecewiseFn:
    if f == g:
        return f
    xs, (fl, fv, fr), (gl, gv, gr) = _common(f, g, True)
    return _canonical(
        xs,
        list(map(pick, fl, gl)),
        list(map(pick, fv, gv)),
        list(map(pick, fr, gr)),
    )


def pointwise_min(f: PiecewiseFn, g: PiecewiseFn) -> PiecewiseFn:
    return _combine(f, g, min)


def pointwise_max(f: PiecewiseFn, g: PiecewiseFn) -> PiecewiseFn:
    return _combine(f, g, max)


def leq(f: PiecewiseFn, g: PiecewiseFn) -> bool:
    """Pointwise ``f <= g`` everywhere on [0, 1]."""
    xs, (fl, fv, fr), (gl, gv, gr) = _common(f, g, False)
    return (
        all(a <= b for a, b in zip(fv, gv))
        and all(a <= b for a, b in zip(fl, gl))
        and all(a <= b for a, b in zip(fr, gr))
    )


def agreement_bounds(f: PiecewiseFn, g: PiecewiseFn):
    """``(inf, sup)`` of ``{x : f(x) = g(x)}``, or ``None`` if that set is empty."""
    xs, (fl, fv, fr), (gl, gv, gr) = _common(f, g, False)
    lo = hi = None

    def add(a, b):
        nonlocal lo, hi
        lo = a if lo is None or a < lo else lo
        hi = b if hi is None or b > hi else hi

    for i, x in enumerate(xs):
        if fv[i] == gv[i]:
            add(x, x)
    for i in range(len(xs) - 1):
        d0 = fr[i] - gr[i]
        d1 = fl[i + 1] - gl[i + 1]
        if d0 == 0 and d1 == 0:
            add(xs[i], xs[i + 1])
        elif (d0 < 0 < d1) or (d1 < 0 < d0):
            c = xs[i] + d0 / (d0 - d1) * (xs[i + 1] - xs[i])
            add(c, c)
    return None if lo is None else (lo, hi)


def reflect(f: PiecewiseFn) -> PiecewiseFn:
    """The function ``x -> f(1 - x)``."""
    return PiecewiseFn(
        tuple(1 - x for x in reversed(f.xs)),
        tuple(reversed(f.rights)),
        tuple(reversed(f.values)),
        tuple(reversed(f.lefts)),
    )


# -- suprema and envelopes --------------------------------------------------


def sup_on(f: PiecewiseFn, lo, hi, lo_open: bool = False, hi_open: bool = False) -> Sup:
    """Exact supremum of ``f`` over an interval with optionally open ends.

    The candidates are point values at closed ends and interior breakpoints,
    and the one-sided limits bounding each linear piece.  A piece whose two
    limits are equal is constant and therefore attains its value.
    """
    lo, hi = _check_point(lo), _check_point(hi)
    if lo > hi or (lo == hi and (lo_open or hi_open)):
        raise EmptyIntervalError(f"empty interval between {lo} and {hi}")
    if lo == hi:
        return Sup(eval_at(f, lo), True)
    a = bisect_left(f.xs, lo)
    if f.xs[a] == lo:
        a += 1
    b = bisect_left(f.xs, hi)
    cuts = [lo, *f.xs[a:b], hi]
    xs, ls, vs, rs = _sample(f, cuts)
    best = None
    attained = False
    cands = []
    if not lo_open:
        cands.append((vs[0], True))
    if not hi_open:
        cands.append((vs[-1], True))
    for i in range(1, len(xs) - 1):
        cands.append((vs[i], True))
    for i in range(len(xs) - 1):
        r, l = rs[i], ls[i + 1]
        cands.append((max(r, l), r == l))
    for v, att in cands:
        if best is None or v > best:
            best, attained = v, att
        elif v == best:
            attained = attained or att
    return Sup(best, attained)


def supremum(f: PiecewiseFn) -> Fraction:
    return sup_on(f, ZERO, ONE).value


def left_envelope(f: PiecewiseFn) -> PiecewiseFn:
    """``x -> sup{f(y) : y <= x}``, computed by a left-to-right sweep."""
    xs, ls, vs, rs = f.xs, f.lefts, f.values, f.rights
    m = vs[0]
    ox, ol, ov, orr = [xs[0]], [m], [m], []
    for i in range(len(xs) - 1):
        r, l = rs[i], ls[i + 1]
        k = m if m > r else r
        orr.append(k)
        if r < m < l:
            # the rising piece overtakes the running maximum
            ox.append(xs[i] + (m - r) / (l - r) * (xs[i + 1] - xs[i]))
            ol.append(m)
            ov.append(m)
            orr.append(m)
        lim = k if k > l else l
        v = vs[i + 1]
        m = lim if lim > v else v
        ox.append(xs[i + 1])
        ol.append(lim)
        ov.append(m)
    orr.append(m)
    return _canonical(ox, ol, ov, orr)


def right_envelope(f: PiecewiseFn) -> PiecewiseFn:
    """``x -> sup{f(y) : y >= x}``."""
    return reflect(left_envelope(reflect(f)))


def weak_left_envelope(f: PiecewiseFn) -> PiecewiseFn:
    """``x -> sup{f(y) : y < x}`` on (0, 1], and ``f(0)`` at 0.

    Equal to the left limit of the left envelope at each point, so only the
    point values at breakpoints change.
    """
    e = left_envelope(f)
    vs = list(e.lefts)
    vs[0] = f.values[0]
    rs = list(e.rights)
    ls = list(e.lefts)
    ls[0] = vs[0]
    rs[-1] = vs[-1]
    return _canonical(list(e.xs), ls, vs, rs)


def weak_right_envelope(f: PiecewiseFn) -> PiecewiseFn:
    """``x -> sup{f(y) : y > x}`` on [0, 1), and ``f(1)`` at 1."""
    return reflect(weak_left_envelope(reflect(f)))


# -- predicates and characteristic points -----------------------------------


def is_normal(f: PiecewiseFn) -> bool:
    return supremum(f) == 1


def is_convex(f: PiecewiseFn) -> bool:
    """Fuzzy convexity, decided through ``f == min(f^L, f^R)``."""
    return f == pointwise_min(left_envelope(f), right_envelope(f))


def in_L(f: PiecewiseFn) -> bool:
    return is_normal(f) and is_convex(f)


class BalanceData(NamedTuple):
    l1: Fraction
    r1: Fraction
    bf: Fraction
    cf: Fraction


def level_one_left(f: PiecewiseFn) -> Fraction:
    """``inf{x : f^L(x) >= 1}`` for normal ``f``."""
    e = left_envelope(f)
    for x, v, r in zip(e.xs, e.values, e.rights):
        if v == 1 or r == 1:
            return x
    raise NotNormalError("left envelope never reaches 1")


def level_one_right(f: PiecewiseFn) -> Fraction:
    """``sup{x : f^R(x) >= 1}`` for normal ``f``."""
    e = right_envelope(f)
    for x, v, l in zip(reversed(e.xs), reversed(e.values), reversed(e.lefts)):
        if v == 1 or l == 1:
            return x
    raise NotNormalError("right envelope never reaches 1")


def balance_data(f: PiecewiseFn) -> BalanceData:
    if not is_normal(f):
        raise NotNormalError("balance data needs a normal function")
    # f(0) = f^L(0) and f(1) = f^R(1): neither agreement set is empty
    left = agreement_bounds(f, left_envelope(f))
    right = agreement_bounds(f, right_envelope(f))
    return BalanceData(level_one_left(f), level_one_right(f), left[1], right[0])


def convex_profile(f: PiecewiseFn) -> PiecewiseFn:
    """Rebuild ``f`` in L from its envelopes and its two level-one points.

    Left envelope on ``[0, l1)``, ``f(l1)`` at ``l1``, 1 strictly between
    the two points, ``f(r1)`` at ``r1`` and the right envelope after it.
    """
    if not in_L(f):
        raise NotInLError("convex profile needs a normal convex function")
    fl, fr = left_envelope(f), right_envelope(f)
    x1, x2 = level_one_left(f), level_one_right(f)
    v1, v2 = eval_at(f, x1), eval_at(f, x2)
    xs = _merge(_merge(fl.xs, fr.xs), (x1, x2))
    ls, vs, rs = [], [], []
    for x in xs:
        if x == x1:
            vs.append(v1)
        elif x == x2:
            vs.append(v2)
        elif x < x1:
            vs.append(eval_at(fl, x))
        elif x < x2:
            vs.append(ONE)
        else:
            vs.append(eval_at(fr, x))
        if x <= x1:
            ls.append(limits_at(fl, x)[0])
        elif x <= x2:
            ls.append(ONE)
        else:
            ls.append(limits_at(fr, x)[0])
        if x < x1:
            rs.append(limits_at(fl, x)[2])
        elif x < x2:
            rs.append(ONE)
        else:
            rs.append(limits_at(fr, x)[2])
    ls[0] = vs[0]
    rs[-1] = vs[-1]
    return _canonical(xs, ls, vs, rs)
