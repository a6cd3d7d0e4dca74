"""Operations on Map(I, I) built from sup-convolutions.

The meet and join convolutions

    (f ⊓ g)(x) = sup{f(y) ∧ g(z) : y ∧ z = x}
    (f ⊔ g)(x) = sup{f(y) ∧ g(z) : y ∨ z = x}

are evaluated through their closed forms.  With ``y ∧ z = x`` one of the
two arguments equals ``x`` and the other ranges over ``[x, 1]``, so

    f ⊓ g = (f ∧ g^R) ∨ (g ∧ f^R),     f ⊔ g = (f ∧ g^L) ∨ (g ∧ f^L).

These forms are certified against the literal enumeration in
:mod:`t2fuzzy.verify`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

from .errors import NotInLError, PreconditionError
from .pwl import (
    ONE,
    ZERO,
    PiecewiseFn,
    eval_at,
    in_L,
    indicator,
    leq,
    left_envelope,
    pointwise_max,
    pointwise_min,
    reflect,
    right_envelope,
    singleton,
    with_value_at,
)
from .tnorms import T_CONORM, T_NORM, ScalarTNorm, get_tnorm

HALF = Fraction(1, 2)
UNIT = singleton(1)
BOTTOM = singleton(0)
TOP = indicator(0, 1)


def meet_conv(f: PiecewiseFn, g: PiecewiseFn) -> PiecewiseFn:
    """Intersection ``f ⊓ g``."""
    return pointwise_max(
        pointwise_min(f, right_envelope(g)),
        pointwise_min(g, right_envelope(f)),
    )


def join_conv(f: PiecewiseFn, g: PiecewiseFn) -> PiecewiseFn:
    """Union ``f ⊔ g``."""
    return pointwise_max(
        pointwise_min(f, left_envelope(g)),
        pointwise_min(g, left_envelope(f)),
    )


def negation(f: PiecewiseFn) -> PiecewiseFn:
    """Complement ``x -> f(1 - x)``."""
    return reflect(f)


def bar_meet(f: PiecewiseFn, g: PiecewiseFn) -> PiecewiseFn:
    """``f ⊓ g`` with the point value at 1 forced to 0."""
    return with_value_at(meet_conv(f, g), ONE, ZERO)


def star(f: PiecewiseFn, g: PiecewiseFn, check: bool = True) -> PiecewiseFn:
    """The lattice-ordered t_r-norm on normal convex functions.

    ``1_{1}`` is the unit.  Otherwise the result is ``f ⊓ g`` when
    ``f(1) ∧ g(1) = 1`` and ``f ⍃ g`` when it is below 1.
    """
    if check:
        for name, h in (("first", f), ("second", g)):
            if not in_L(h):
                raise NotInLError(f"{name} argument is not normal and convex")
    if f == UNIT:
        return g
    if g == UNIT:
        return f
    if min(f.values[-1], g.values[-1]) == 1:
        return meet_conv(f, g)
    return bar_meet(f, g)


# -- general convolutions ----------------------------------------------------


@dataclass(frozen=True)
class ConvolutionSpec:
    """``(f • g)(x) = sup{combiner(f(y), g(z)) : carrier(y, z) = x}``.

    ``direction`` is ``"norm"`` when the carrier is a t-norm and
    ``"conorm"`` when it is a t-conorm.
    """

    combiner: ScalarTNorm
    carrier: ScalarTNorm
    direction: Literal["norm", "conorm"] = "norm"

    def __post_init__(self):
        want = {"norm": T_NORM, "conorm": T_CONORM}.get(self.direction)
        if want is None:
            raise ValueError(f"direction must be 'norm' or 'conorm', got {self.direction!r}")
        if self.carrier.family != want:
            raise PreconditionError(
                f"carrier {self.carrier.name} is a {self.carrier.family}, "
                f"direction {self.direction} needs a {want}"
            )

    @classmethod
    def named(cls, combiner: str, carrier: str) -> ConvolutionSpec:
        car = get_tnorm(carrier)
        return cls(get_tnorm(combiner), car, "conorm" if car.family == T_CONORM else "norm")


MEET_SPEC = ConvolutionSpec.named("min", "min")
JOIN_SPEC = ConvolutionSpec.named("min", "max")


def general_convolution(
    spec: ConvolutionSpec, f: PiecewiseFn, g: PiecewiseFn, resolution: int
) -> list[tuple[Fraction, Fraction]]:
    """Sampled approximation of a sup-convolution on the grid ``k/resolution``.

    Each grid pair ``(y, z)`` is credited to the grid points nearest to
    ``carrier(y, z)`` (both of them on a tie).  Carriers that keep the grid
    closed (min, max, Łukasiewicz) are therefore matched exactly; others
    are rounded.  When the combiner is min and the carrier is min or max
    the exact closed form is sampled instead.
    """
    if resolution < 2:
        raise ValueError("resolution must be at least 2")
    n = resolution
    xs = [Fraction(k, n) for k in range(n + 1)]
    if spec.combiner.name == "min" and spec.carrier.name in ("min", "max"):
        h = meet_conv(f, g) if spec.carrier.name == "min" else join_conv(f, g)
        return [(x, eval_at(h, x)) for x in xs]
    fv = [eval_at(f, x) for x in xs]
    gv = [eval_at(g, x) for x in xs]
    best = [ZERO] * (n + 1)
    comb, car = spec.combiner, spec.carrier
    for i, y in enumerate(xs):
        for j, z in enumerate(xs):
            v = comb(fv[i], gv[j])
            if v <= 0:
                continue
            c = car(y, z) * n
            lo = c.numerator // c.denominator
            frac = c - lo
            if frac < HALF:
                targets = (lo,)
            elif frac > HALF:
                targets = (lo + 1,)
            else:
                targets = (lo, lo + 1)
            for k in targets:
                if v > best[k]:
                    best[k] = v
    return list(zip(xs, best))


def convolution_at_one(spec: ConvolutionSpec, f: PiecewiseFn, g: PiecewiseFn) -> Fraction:
    """Exact value at 1 of the convolution for a t-norm carrier.

    A t-norm reaches 1 only at ``(1, 1)``, so the supremum collapses to the
    single term ``combiner(f(1), g(1))``.
    """
    if spec.carrier.family != T_NORM:
        raise PreconditionError("the value at 1 collapses only for t-norm carriers")
    return spec.combiner(f.values[-1], g.values[-1])


# -- orders --------------------------------------------------------------------


def order_meet(f: PiecewiseFn, g: PiecewiseFn, method: str = "auto") -> bool:
    """``f ⊑ g``, i.e. ``f ⊓ g == f``.

    On normal convex inputs the envelope criterion ``g^L <= f^L`` and
    ``f^R <= g^R`` is used; ``method`` may force ``"envelope"`` or
    ``"definition"``.
    """
    if method == "auto":
        method = "envelope" if in_L(f) and in_L(g) else "definition"
    if method == "definition":
        return meet_conv(f, g) == f
    if method == "envelope":
        if not (in_L(f) and in_L(g)):
            raise PreconditionError("the envelope criterion needs normal convex inputs")
        return leq(left_envelope(g), left_envelope(f)) and leq(right_envelope(f), right_envelope(g))
    raise ValueError(f"unknown method {method!r}")


def order_join(f: PiecewiseFn, g: PiecewiseFn) -> bool:
    """``f ⪯ g``, i.e. ``f ⊔ g == g``."""
    return join_conv(f, g) == g
