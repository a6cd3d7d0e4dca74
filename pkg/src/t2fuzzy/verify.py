"""Random generation, brute-force oracles and the property-suite runner.

Every suite is deterministic in ``(seed, trials, config)``: trial ``t`` of
suite ``s`` draws from ``random.Random(f"{seed}:{s}:{t}")`` and the report
is assembled in trial order.
"""

from __future__ import annotations

import dataclasses
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Callable, Sequence

from . import intervals as iv
from .convolution import (
    BOTTOM,
    JOIN_SPEC,
    MEET_SPEC,
    TOP,
    UNIT,
    ConvolutionSpec,
    join_conv,
    meet_conv,
    negation,
    order_join,
    order_meet,
    star,
)
from .errors import PreconditionError, UnknownNameError
from .pwl import (
    ONE,
    ZERO,
    PiecewiseFn,
    balance_data,
    constant,
    convex_profile,
    eval_at,
    from_breakpoints,
    in_L,
    indicator,
    is_convex,
    leq,
    left_envelope,
    level_one_left,
    level_one_right,
    limits_at,
    pointwise_max,
    pointwise_min,
    right_envelope,
    singleton,
    sup_on,
    supremum,
    weak_left_envelope,
    weak_right_envelope,
    with_value_at,
)
from .report import HOLDS, VIOLATED, PropertyReport, decode_arg
from .tnorms import BUILTIN_TNORMS, REGISTRY, T_NORM, check_tnorm_axioms, get_tnorm, grid, unit_preimage_is_corner


@dataclass(frozen=True)
class GeneratorConfig:
    """Knobs for the random function generators.

    ``unit_mass`` is the chance of emitting ``1_{1}`` outright and
    ``endpoint_jump_mass`` the chance of pushing the value at 1 below its
    left limit.
    """

    seed: int = 0
    max_breakpoints: int = 6
    denominator_bound: int = 64
    unit_mass: float = 0.05
    endpoint_jump_mass: float = 0.25

    def __post_init__(self):
        if self.max_breakpoints < 2:
            raise ValueError("max_breakpoints must be at least 2")
        if self.denominator_bound < 2:
            raise ValueError("denominator_bound must be at least 2")
        for name in ("unit_mass", "endpoint_jump_mass"):
            p = getattr(self, name)
            if not 0 <= p <= 1:
                raise ValueError(f"{name} must lie in [0, 1]")

    def describe(self) -> dict:
        d = dataclasses.asdict(self)
        d.pop("seed")
        return d


# -- generators --------------------------------------------------------------


def _denominators(bound: int) -> list[int]:
    ds, d = [], 2
    while d < bound:
        ds.append(d)
        d *= 2
    ds.append(bound)
    return ds


def random_rational(rng: random.Random, cfg: GeneratorConfig, lo=ZERO, hi=ONE, open_hi=False) -> Fraction:
    """A rational in ``[lo, hi]`` (or ``[lo, hi)``) with a small denominator.

    Coarse denominators are favoured so that ties between inputs, which
    exercise the equality branches of the operations, come up often.
    """
    for _ in range(64):
        d = rng.choice(_denominators(cfg.denominator_bound))
        k_lo = -(-lo * d // 1)
        k_hi = hi * d // 1
        if open_hi and Fraction(k_hi, d) == hi:
            k_hi -= 1
        if k_lo <= k_hi:
            return Fraction(rng.randint(int(k_lo), int(k_hi)), d)
    return lo


def _grade(rng, cfg) -> Fraction:
    r = rng.random()
    if r < 0.15:
        return ZERO
    if r < 0.25:
        return ONE
    return random_rational(rng, cfg)


def gen_function(cfg: GeneratorConfig, rng: random.Random, normal: bool = False) -> PiecewiseFn:
    """A random element of M with jumps; ``normal`` forces one grade to 1."""
    k = rng.randint(0, cfg.max_breakpoints - 2)
    inner = set()
    for _ in range(k):
        x = random_rational(rng, cfg)
        if 0 < x < 1:
            inner.add(x)
    xs = [ZERO, *sorted(inner), ONE]
    ls, vs, rs = [], [], []
    for _ in xs:
        v = _grade(rng, cfg)
        if rng.random() < 0.6:
            l = r = v
        else:
            l = v if rng.random() < 0.3 else _grade(rng, cfg)
            r = v if rng.random() < 0.3 else _grade(rng, cfg)
        ls.append(l)
        vs.append(v)
        rs.append(r)
    n = len(xs)
    if normal:
        slots = [(i, s) for i in range(n) for s in "lvr" if not (i == 0 and s == "l") and not (i == n - 1 and s == "r")]
        i, s = rng.choice(slots)
        {"l": ls, "v": vs, "r": rs}[s][i] = ONE
    ls[0] = vs[0]
    rs[-1] = vs[-1]
    return from_breakpoints(zip(xs, ls, vs, rs))


def gen_normal_convex(
    cfg: GeneratorConfig, rng: random.Random, at_one: str | None = None
) -> PiecewiseFn:
    """A random element of L.

    A random normal function ``h`` is drawn and replaced by
    ``min(h^L, h^R)``, the smallest convex function above it; that hull is
    normal and convex.  ``at_one`` forces ``f(1) == 1`` (``"one"``) or
    ``f(1) < 1`` (``"below"``).
    """
    if at_one not in (None, "one", "below"):
        raise ValueError(f"at_one must be None, 'one' or 'below', got {at_one!r}")
    if at_one != "below" and rng.random() < cfg.unit_mass:
        return UNIT
    while True:
        h = gen_function(cfg, rng, normal=True)
        if at_one == "one":
            h = with_value_at(h, ONE, ONE)
        elif at_one == "below":
            if h.values[-1] == 1 and supremum(with_value_at(h, ONE, ZERO)) < 1:
                continue
            h = with_value_at(h, ONE, random_rational(rng, cfg, open_hi=True))
        f = pointwise_min(left_envelope(h), right_envelope(h))
        if at_one != "one" and rng.random() < cfg.endpoint_jump_mass:
            lim = f.lefts[-1]
            if lim > 0 and sup_on(f, ZERO, ONE, False, True).value == 1:
                f = with_value_at(f, ONE, random_rational(rng, cfg, hi=lim, open_hi=True))
        if not in_L(f):
            raise AssertionError(f"generator produced a function outside L: {f}")
        if at_one == "one" and f.values[-1] != 1 or at_one == "below" and f.values[-1] == 1:
            continue
        return f


def gen_interval(cfg: GeneratorConfig, rng: random.Random) -> tuple[Fraction, Fraction]:
    """Endpoints ``a <= b`` with extra weight on ``b == 1`` and on points."""
    b = ONE if rng.random() < 0.3 else random_rational(rng, cfg)
    r = rng.random()
    if r < 0.2:
        a = b
    elif r < 0.3:
        a = ZERO
    else:
        a = random_rational(rng, cfg, hi=b)
    return a, b


# -- oracles -------------------------------------------------------------------


def oracle_convolution(
    spec: ConvolutionSpec, f: PiecewiseFn, g: PiecewiseFn, grid_points: Sequence[Fraction]
) -> list[tuple[Fraction, Fraction]]:
    """Evaluate a min- or max-carrier convolution by enumerating the
    constraint set over an extended grid.

    Every grid point ``p`` contributes three samples: ``p`` itself and the
    infinitesimally displaced ``p-`` and ``p+`` carrying the one-sided limits.
    Samples are ordered lexicographically by ``(p, side)``.  Because the grid
    holds every breakpoint, each input is linear between neighbouring grid
    points, and the supremum over any open gap is one of its end limits; so
    the maximum over all sample pairs ``(y, z)`` with ``carrier(y, z) = x``
    is the exact supremum at each grid point ``x``.
    """
    name = spec.carrier.name
    if name not in ("min", "max"):
        raise PreconditionError("the oracle is exact only for min and max carriers")
    pts = sorted(set(Fraction(p) for p in grid_points))
    missing = (set(f.xs) | set(g.xs)) - set(pts)
    if missing:
        raise PreconditionError(f"grid misses breakpoints {sorted(missing)}")
    keys, fvals, gvals = [], [], []
    for p in pts:
        fl, fv, fr = limits_at(f, p)
        gl, gv, gr = limits_at(g, p)
        for side, a, b in ((-1, fl, gl), (0, fv, gv), (1, fr, gr)):
            if (side == -1 and p == 0) or (side == 1 and p == 1):
                continue
            keys.append((p, side))
            fvals.append(a)
            gvals.append(b)
    comb = spec.combiner
    pick = min if name == "min" else max
    index = {k: i for i, k in enumerate(keys)}
    out = []
    for x in pts:
        t = index[(x, 0)]
        # min(y, z) = x forces one coordinate to be x and the other >= x
        # (<= x for max); enumerate exactly those pairs and confirm each
        partners = range(t, len(keys)) if name == "min" else range(t + 1)
        best = None
        for i in partners:
            for a, b in ((t, i), (i, t)):
                if pick(keys[a], keys[b]) != keys[t]:
                    continue
                v = comb(fvals[a], gvals[b])
                if best is None or v > best:
                    best = v
        out.append((x, best))
    return out


def convex_bruteforce(f: PiecewiseFn) -> bool:
    """Check ``f(y) >= f(x) ∧ f(z)`` for all sampled ``x <= y <= z``.

    Samples are the breakpoints, piece midpoints, and points a tiny
    fraction of the smallest gap on either side of each breakpoint (which
    expose dips that only show in one-sided limits).  Running maxima from
    both sides make the triple check linear in the sample count.
    """
    xs = f.xs
    gap = min(b - a for a, b in zip(xs, xs[1:]))
    eps = gap / 10**6
    pts = set(xs)
    for a, b in zip(xs, xs[1:]):
        pts.update((a + eps, (a + b) / 2, b - eps))
    pts = sorted(pts)
    vals = [eval_at(f, p) for p in pts]
    n = len(vals)
    pre, suf = [vals[0]] * n, [vals[-1]] * n
    for i in range(1, n):
        pre[i] = max(pre[i - 1], vals[i])
    for i in range(n - 2, -1, -1):
        suf[i] = max(suf[i + 1], vals[i])
    return all(vals[i] >= min(pre[i], suf[i]) for i in range(n))


# -- laws ------------------------------------------------------------------------

LAWS: dict[str, Callable] = {}


def law(name: str):
    def register(fn):
        LAWS[name] = fn
        return fn

    return register


def _eq(a, b):
    return a == b, b, a


def _probes(*fns: PiecewiseFn) -> list[Fraction]:
    pts = set()
    for f in fns:
        pts.update(f.xs)
    pts = sorted(pts)
    mids = [(a + b) / 2 for a, b in zip(pts, pts[1:])]
    return sorted(set(pts) | set(mids))


def _agree_at(f, g, points):
    for x in points:
        a, b = eval_at(f, x), eval_at(g, x)
        if a != b:
            return False, f"{b} at x={x}", a
    return True, "", ""


@law("O1")
def law_commutative(f, g):
    return _eq(star(f, g, False), star(g, f, False))


@law("O2")
def law_associative(f, g, h):
    return _eq(star(star(f, g, False), h, False), star(f, star(g, h, False), False))


@law("O3")
def law_unit(f):
    a, b = star(f, UNIT, False), star(UNIT, f, False)
    return a == f and b == f, f, a if a != f else b


@law("O4")
def law_monotone(f, g, h):
    if not order_meet(f, g, "envelope"):
        return False, "premise f ⊑ g", "premise false"
    a, b = star(f, h, False), star(g, h, False)
    return order_meet(a, b, "envelope"), f"⊑ {b}", a


@law("O4'")
def law_join_distributive(f, g, h):
    return _eq(star(f, join_conv(g, h), False), join_conv(star(f, g, False), star(f, h, False)))


@law("O4''")
def law_meet_distributive(f, g, h):
    return _eq(star(f, meet_conv(g, h), False), meet_conv(star(f, g, False), star(f, h, False)))


@law("O5")
def law_top_interval(a, b):
    return _eq(star(TOP, indicator(a, b)), indicator(0, b))


@law("O6")
def law_points_closed(x1, x2):
    return _eq(star(singleton(x1), singleton(x2)), singleton(min(x1, x2)))


@law("O7")
def law_intervals_closed(a1, b1, a2, b2):
    return _eq(star(indicator(a1, b1), indicator(a2, b2)), indicator(min(a1, a2), min(b1, b2)))


@law("star-closure")
def law_star_closure(f, g):
    return in_L(star(f, g, False)), "in L", star(f, g, False)


@law("star-value-at-one")
def law_star_value_at_one(f, g):
    if f == UNIT or g == UNIT:
        return True, "", ""
    want = ONE if min(f.values[-1], g.values[-1]) == 1 else ZERO
    return _eq(star(f, g, False).values[-1], want)


@law("star-R1")
def law_star_r1(f, g):
    return _eq(level_one_right(star(f, g, False)), min(level_one_right(f), level_one_right(g)))


@law("star-lower-bound")
def law_star_lower_bound(f, g):
    s = star(f, g, False)
    return order_meet(s, f, "envelope") and order_meet(s, g, "envelope"), "⊑ both inputs", s


@law("star-not-unit")
def law_star_not_unit(f, g):
    if f == UNIT or g == UNIT:
        return True, "", ""
    s = star(f, g, False)
    return s != UNIT, "not 1_{1}", s


@law("star-left-envelope")
def law_star_left_envelope(f, g):
    return _eq(left_envelope(star(f, g, False)), left_envelope(meet_conv(f, g)))


@law("star-right-envelope")
def law_star_right_envelope(f, g):
    got = right_envelope(star(f, g, False))
    want = right_envelope(meet_conv(f, g))
    if f != UNIT and g != UNIT and min(f.values[-1], g.values[-1]) < 1:
        want = with_value_at(want, ONE, ZERO)
    return _eq(got, want)


@law("unit-overlap")
def law_unit_overlap(f):
    a, b = meet_conv(UNIT, f), meet_conv(f, UNIT)
    return a == f and b == f, f, a if a != f else b


# envelopes on M and L

@law("P1")
def law_below_envelopes(f):
    m = pointwise_min(left_envelope(f), right_envelope(f))
    return leq(f, m), f"<= {m}", f


@law("P2")
def law_idempotent(f):
    fl, fr = left_envelope(f), right_envelope(f)
    if left_envelope(fl) != fl:
        return False, fl, left_envelope(fl)
    return _eq(right_envelope(fr), fr)


@law("P3")
def law_cross_envelopes(f):
    c = constant(supremum(f))
    a, b = right_envelope(left_envelope(f)), left_envelope(right_envelope(f))
    return a == c and b == c, c, (a, b)


@law("P4")
def law_meet_order_criterion(f, g):
    lhs = meet_conv(f, g) == f
    rhs = leq(pointwise_min(right_envelope(f), g), f) and leq(f, right_envelope(g))
    return _eq(lhs, rhs)


@law("P5")
def law_join_order_criterion(f, g):
    lhs = join_conv(f, g) == g
    rhs = leq(pointwise_min(f, left_envelope(g)), g) and leq(g, left_envelope(f))
    return _eq(lhs, rhs)


@law("P6")
def law_convexity_criterion(f):
    return _eq(is_convex(f), convex_bruteforce(f))


@law("sup-split")
def law_sup_split(f):
    c = constant(supremum(f))
    fl, fr = left_envelope(f), right_envelope(f)
    for a, b in ((fl, fr), (fl, weak_right_envelope(f)), (fr, weak_left_envelope(f))):
        m = pointwise_max(a, b)
        if m != c:
            return False, c, m
    return True, "", ""


@law("lemma-i")
def law_meet_left(f, g):
    return _eq(left_envelope(meet_conv(f, g)), pointwise_max(left_envelope(f), left_envelope(g)))


@law("lemma-ii")
def law_meet_right(f, g):
    return _eq(right_envelope(meet_conv(f, g)), pointwise_min(right_envelope(f), right_envelope(g)))


@law("lemma-iii")
def law_join_left(f, g):
    return _eq(left_envelope(join_conv(f, g)), pointwise_min(left_envelope(f), left_envelope(g)))


@law("lemma-iv")
def law_join_right(f, g):
    return _eq(right_envelope(join_conv(f, g)), pointwise_max(right_envelope(f), right_envelope(g)))


@law("weak-left")
def law_weak_left(f):
    w = weak_left_envelope(f)
    if w(0) != f(0):
        return False, f(0), w(0)
    fl = left_envelope(f)
    for x in _probes(f, fl):
        if x == 0:
            continue
        direct = sup_on(f, ZERO, x, False, True).value
        limit = limits_at(fl, x)[0]
        if not (w(x) == direct == limit):
            return False, f"{direct} (limit {limit}) at x={x}", w(x)
    return True, "", ""


@law("weak-right")
def law_weak_right(f):
    w = weak_right_envelope(f)
    if w(1) != f(1):
        return False, f(1), w(1)
    fr = right_envelope(f)
    for x in _probes(f, fr):
        if x == 1:
            continue
        direct = sup_on(f, x, ONE, True, False).value
        limit = limits_at(fr, x)[2]
        if not (w(x) == direct == limit):
            return False, f"{direct} (limit {limit}) at x={x}", w(x)
    return True, "", ""


@law("weak-meet")
def law_weak_meet(f, g):
    lhs = weak_left_envelope(meet_conv(f, g))
    rhs = pointwise_max(weak_left_envelope(f), weak_left_envelope(g))
    return _agree_at(lhs, rhs, [x for x in _probes(lhs, rhs) if x > 0])


@law("weak-join")
def law_weak_join(f, g):
    lhs = weak_left_envelope(join_conv(f, g))
    rhs = pointwise_min(weak_left_envelope(f), weak_left_envelope(g))
    return _agree_at(lhs, rhs, [x for x in _probes(lhs, rhs) if x > 0])


@law("L1-meet")
def law_l1_meet(f, g):
    return _eq(level_one_left(meet_conv(f, g)), min(level_one_left(f), level_one_left(g)))


@law("R1-meet")
def law_r1_meet(f, g):
    return _eq(level_one_right(meet_conv(f, g)), min(level_one_right(f), level_one_right(g)))


@law("L1-join")
def law_l1_join(f, g):
    return _eq(level_one_left(join_conv(f, g)), max(level_one_left(f), level_one_left(g)))


@law("R1-join")
def law_r1_join(f, g):
    return _eq(level_one_right(join_conv(f, g)), max(level_one_right(f), level_one_right(g)))


@law("L1<=R1")
def law_l1_le_r1(f):
    a, b = level_one_left(f), level_one_right(f)
    return a <= b, f"<= {b}", a


@law("balance-points")
def law_balance(f):
    bd = balance_data(f)
    return bd.bf == bd.r1 and bd.cf == bd.l1, f"bf={bd.r1} cf={bd.l1}", f"bf={bd.bf} cf={bd.cf}"


@law("five-branch")
def law_five_branch(f):
    return _eq(convex_profile(f), f)


@law("level-one-plateau")
def law_plateau(f):
    l1, r1 = level_one_left(f), level_one_right(f)
    fl, fr = left_envelope(f), right_envelope(f)
    probes = _probes(f, fl, fr)
    for x in probes + [l1 + (1 - l1) / 10**6]:
        if l1 < x <= 1 and fl(x) != 1:
            return False, f"f^L = 1 at x={x}", fl(x)
    for x in probes + [r1 - r1 / 10**6]:
        if 0 <= x < r1 and fr(x) != 1:
            return False, f"f^R = 1 at x={x}", fr(x)
    return True, "", ""


@law("right-sup-open")
def law_right_sup_open(f):
    if level_one_right(f) == 1:
        return True, "", ""
    fr = right_envelope(f)
    for x in _probes(f, fr):
        if x == 1:
            continue
        s = sup_on(f, x, ONE, False, True).value
        if s != fr(x):
            return False, f"{fr(x)} at x={x}", s
    return True, "", ""


# convolutions against the oracle

def _aligned_grid(f, g, n=20):
    return sorted({Fraction(k, n) for k in range(n + 1)} | set(f.xs) | set(g.xs))


@law("meet-oracle")
def law_meet_oracle(f, g):
    pts = _aligned_grid(f, g)
    h = meet_conv(f, g)
    return _eq([(x, h(x)) for x in pts], oracle_convolution(MEET_SPEC, f, g, pts))


@law("join-oracle")
def law_join_oracle(f, g):
    pts = _aligned_grid(f, g)
    h = join_conv(f, g)
    return _eq([(x, h(x)) for x in pts], oracle_convolution(JOIN_SPEC, f, g, pts))


# structure of M

@law("de-morgan-join")
def law_de_morgan_join(f, g):
    return _eq(negation(join_conv(f, g)), meet_conv(negation(f), negation(g)))


@law("de-morgan-meet")
def law_de_morgan_meet(f, g):
    return _eq(negation(meet_conv(f, g)), join_conv(negation(f), negation(g)))


@law("involution")
def law_involution(f):
    return _eq(negation(negation(f)), f)


@law("absorption-join")
def law_absorption_join(f, g):
    return _eq(join_conv(f, meet_conv(f, g)), f)


@law("absorption-meet")
def law_absorption_meet(f, g):
    return _eq(meet_conv(f, join_conv(f, g)), f)


@law("orders-coincide")
def law_orders_coincide(f, g):
    return _eq(order_meet(f, g, "definition"), order_join(f, g))


@law("order-criterion")
def law_order_criterion(f, g):
    return _eq(order_meet(f, g, "envelope"), order_meet(f, g, "definition"))


@law("order-bounds")
def law_order_bounds(f):
    ok = order_meet(BOTTOM, f, "definition") and order_meet(f, UNIT, "definition")
    return ok, "1_{0} ⊑ f ⊑ 1_{1}", ok


# -- suites ------------------------------------------------------------------------


def _trial_rng(cfg: GeneratorConfig, suite: str, t: int) -> random.Random:
    return random.Random(f"{cfg.seed}:{suite}:{t}")


def _check(rep: PropertyReport, name: str, *args, expect: str = HOLDS) -> None:
    holds, expected, actual = LAWS[name](*args)
    rep.record(name, args, holds, expected, actual, expect)


_AT_ONE = ("one", "below")


def suite_star(rep, cfg, trials):
    for name in ("O1", "O2", "O3", "O4", "O4'", "O4''", "O5", "O6", "O7"):
        rep.declare(name)
    seen = set()
    for t in range(trials):
        rng = _trial_rng(cfg, rep.suite, t)
        # cycle through all eight patterns of f(1), g(1), h(1) in {=1, <1}
        modes = [_AT_ONE[(t >> k) & 1] for k in range(3)]
        f, g, h = (gen_normal_convex(cfg, rng, m) for m in modes)
        seen.add(tuple(u.values[-1] == 1 for u in (f, g, h)))
        _check(rep, "O1", f, g)
        _check(rep, "O2", f, g, h)
        _check(rep, "O3", f)
        _check(rep, "O4", meet_conv(f, g), f, h)
        _check(rep, "O4'", f, g, h)
        _check(rep, "O4''", f, g, h)
        _check(rep, "star-closure", f, g)
        _check(rep, "star-value-at-one", f, g)
        _check(rep, "star-R1", f, g)
        _check(rep, "star-lower-bound", f, g)
        _check(rep, "star-not-unit", f, g)
        _check(rep, "star-left-envelope", f, g)
        _check(rep, "star-right-envelope", f, g)
        _check(rep, "unit-overlap", f)
        a, b = gen_interval(cfg, rng)
        _check(rep, "O5", a, b)
        x1 = ONE if rng.random() < 0.25 else random_rational(rng, cfg)
        x2 = ONE if rng.random() < 0.25 else random_rational(rng, cfg)
        _check(rep, "O6", x1, x2)
        (a1, b1), (a2, b2) = gen_interval(cfg, rng), gen_interval(cfg, rng)
        _check(rep, "O7", a1, b1, a2, b2)
    rep.config = {**rep.config, "branch_patterns": len(seen)}


def suite_envelopes(rep, cfg, trials):
    for t in range(trials):
        rng = _trial_rng(cfg, rep.suite, t)
        m = gen_function(cfg, rng)
        m2 = gen_function(cfg, rng)
        n = gen_function(cfg, rng, normal=True)
        f = gen_normal_convex(cfg, rng, rng.choice((None, "one", "below")))
        g = gen_normal_convex(cfg, rng, rng.choice((None, "one", "below")))
        for h in (m, f):
            _check(rep, "P1", h)
            _check(rep, "P2", h)
            _check(rep, "P3", h)
            _check(rep, "P6", h)
            _check(rep, "sup-split", h)
            _check(rep, "weak-left", h)
            _check(rep, "weak-right", h)
        for a, b in ((m, m2), (f, g), (meet_conv(f, g), f), (f, join_conv(f, g))):
            _check(rep, "P4", a, b)
            _check(rep, "P5", a, b)
        for name in ("lemma-i", "lemma-ii", "lemma-iii", "lemma-iv", "weak-meet", "weak-join",
                     "L1-meet", "R1-meet", "L1-join", "R1-join"):
            _check(rep, name, f, g)
        for h in (n, f):
            _check(rep, "L1<=R1", h)
            _check(rep, "level-one-plateau", h)
        _check(rep, "balance-points", f)
        _check(rep, "five-branch", f)
        _check(rep, "right-sup-open", f)


def suite_oracle(rep, cfg, trials):
    for t in range(trials):
        rng = _trial_rng(cfg, rep.suite, t)
        f = gen_normal_convex(cfg, rng)
        g = gen_normal_convex(cfg, rng)
        _check(rep, "meet-oracle", f, g)
        _check(rep, "join-oracle", f, g)


def suite_oracle_m(rep, cfg, trials):
    for t in range(trials):
        rng = _trial_rng(cfg, rep.suite, t)
        f, g = gen_function(cfg, rng), gen_function(cfg, rng)
        _check(rep, "meet-oracle", f, g)
        _check(rep, "join-oracle", f, g)


def suite_de_morgan(rep, cfg, trials):
    for t in range(trials):
        rng = _trial_rng(cfg, rep.suite, t)
        f, g = gen_function(cfg, rng), gen_function(cfg, rng)
        _check(rep, "de-morgan-join", f, g)
        _check(rep, "de-morgan-meet", f, g)
        _check(rep, "involution", f)


def suite_absorption(rep, cfg, trials):
    rep.declare("absorption-join", VIOLATED)
    rep.declare("absorption-meet", VIOLATED)
    for t in range(trials):
        rng = _trial_rng(cfg, rep.suite, t)
        f, g = gen_function(cfg, rng), gen_function(cfg, rng)
        _check(rep, "absorption-join", f, g, expect=VIOLATED)
        _check(rep, "absorption-meet", f, g, expect=VIOLATED)


def suite_absorption_l(rep, cfg, trials):
    for t in range(trials):
        rng = _trial_rng(cfg, rep.suite, t)
        f, g = gen_normal_convex(cfg, rng), gen_normal_convex(cfg, rng)
        _check(rep, "absorption-join", f, g)
        _check(rep, "absorption-meet", f, g)


def suite_orders(rep, cfg, trials):
    for t in range(trials):
        rng = _trial_rng(cfg, rep.suite, t)
        f, g = gen_normal_convex(cfg, rng), gen_normal_convex(cfg, rng)
        for a, b in ((f, g), (meet_conv(f, g), f), (f, join_conv(f, g)), (f, f)):
            _check(rep, "orders-coincide", a, b)
            _check(rep, "order-criterion", a, b)
        _check(rep, "order-bounds", f)


def suite_generator(rep, cfg, trials):
    hits = {"one": 0, "below": 0}
    for t in range(trials):
        rng = _trial_rng(cfg, rep.suite, t)
        f = gen_normal_convex(cfg, rng)
        hits["one" if f.values[-1] == 1 else "below"] += 1
        rep.record("in-L", (f,), in_L(f), "in L", f)
        _check(rep, "five-branch", f)
    rep.config = {**rep.config, "hits_one": hits["one"], "hits_below": hits["below"]}


def suite_scalar(rep, cfg, trials):
    probes = grid(21)
    for name, op in REGISTRY.items():
        rep.merge(check_tnorm_axioms(op, probes), f"{name}.")
        if op.family == T_NORM:
            rep.merge(unit_preimage_is_corner(op, probes), f"{name}.")


def suite_intervals(rep, cfg, trials):
    probes = iv.probe_grid()
    expect = {"1": VIOLATED, "6": VIOLATED, "5'": VIOLATED}
    rep.merge(iv.check_interval_conditions(iv.circled_star, probes, expect, "circledstar"), "circledstar.")
    for name in ("min", "product", "lukasiewicz"):
        op = iv.interval_tnorm(get_tnorm(name))
        rep.merge(iv.check_interval_conditions(op, probes), f"interval-{name}.")
    for x, y in product(probes, repeat=2):
        rep.record("circledstar.corners", (x, y), iv.circled_star(x, y) == iv.circled_star_corners(x, y))
        rep.record("lattice.absorption", (x, y),
                   iv.meet(x, iv.join(x, y)) == x and iv.join(x, iv.meet(x, y)) == x)
    for x, y, z in product(probes, repeat=3):
        rep.record("lattice.distributive", (x, y, z),
                   iv.meet(x, iv.join(y, z)) == iv.join(iv.meet(x, y), iv.meet(x, z)))
    six = iv.probe_grid([Fraction(k, 5) for k in range(6)])
    for x, y in product(six, repeat=2):
        if iv.meet(x, y).degenerate:
            i = iv.single_point_factor_meet(x, y)
            rep.record("min-single", (x, y), (x, y)[i].degenerate)
        if iv.join(x, y).degenerate:
            i = iv.single_point_factor_join(x, y)
            rep.record("max-single", (x, y), (x, y)[i].degenerate)


SUITES: dict[str, tuple[Callable, int]] = {
    "star-axioms": (suite_star, 500),
    "envelope-laws": (suite_envelopes, 1000),
    "oracle": (suite_oracle, 200),
    "oracle-on-M": (suite_oracle_m, 200),
    "de-morgan": (suite_de_morgan, 200),
    "absorption-on-M": (suite_absorption, 1000),
    "absorption-on-L": (suite_absorption_l, 200),
    "orders": (suite_orders, 200),
    "generator": (suite_generator, 1000),
    "scalar-tnorms": (suite_scalar, 1),
    "intervals": (suite_intervals, 1),
}


def run_suite(name: str, cfg: GeneratorConfig | None = None, trials: int | None = None) -> PropertyReport:
    """Run one registered suite; deterministic in ``(cfg, trials)``."""
    try:
        fn, default = SUITES[name]
    except KeyError:
        raise UnknownNameError(f"unknown suite {name!r}; known: {', '.join(SUITES)}") from None
    cfg = cfg or GeneratorConfig()
    trials = default if trials is None else trials
    if trials < 0:
        raise ValueError("trials must be non-negative")
    rep = PropertyReport(name, seed=cfg.seed, trials=trials, config=cfg.describe())
    fn(rep, cfg, trials)
    return rep


def replay_witness(doc: dict) -> bool:
    """Re-evaluate a persisted witness; returns whether the law holds on it."""
    name = doc["law"]
    if name not in LAWS:
        raise UnknownNameError(f"law {name!r} cannot be replayed")
    args = [decode_arg(a) for a in doc["args"]]
    return LAWS[name](*args)[0]
