"""The two counterexamples, evaluated exactly."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .convolution import TOP, ConvolutionSpec, convolution_at_one, star
from .intervals import Interval, circled_star, subset_order
from .pwl import PiecewiseFn, polyline
from .tnorms import BUILTIN_TNORMS, get_tnorm

HALF = Fraction(1, 2)


def tent() -> PiecewiseFn:
    """``2x`` on ``[0, 1/2]`` and ``3/2 - x`` on ``(1/2, 1]``."""
    return polyline([(0, 0), (HALF, 1), (1, HALF)])


@dataclass(frozen=True)
class SubsetMonotonicityReport:
    x: Interval
    y: Interval
    z: Interval
    zx: Interval
    zy: Interval
    premise: bool
    conclusion: bool

    @property
    def violated(self) -> bool:
        return self.premise and not self.conclusion

    def lines(self) -> list[str]:
        return [
            f"x = {self.x}",
            f"y = {self.y}",
            f"z = {self.z}",
            f"x subset of y: {str(self.premise).lower()}",
            f"z ⊛ x = {self.zx}",
            f"z ⊛ y = {self.zy}",
            f"z ⊛ x subset of z ⊛ y: {str(self.conclusion).lower()}",
            "(5') VIOLATED" if self.violated else "(5') holds on this triple",
        ]


def counterexample_q1() -> SubsetMonotonicityReport:
    """⊛ distributes over meet and join yet is not monotone for inclusion."""
    x = Interval(HALF, HALF)
    y = Interval(HALF, 1)
    z = Interval(HALF, HALF)
    zx, zy = circled_star(z, x), circled_star(z, y)
    return SubsetMonotonicityReport(x, y, z, zx, zy, subset_order(x, y), subset_order(zx, zy))


@dataclass(frozen=True)
class NotAConvolutionRow:
    combiner: str
    carrier: str
    convolution_at_one: Fraction
    star_at_one: Fraction

    @property
    def differs(self) -> bool:
        return self.convolution_at_one != self.star_at_one


@dataclass(frozen=True)
class NotAConvolutionReport:
    f: PiecewiseFn
    g: PiecewiseFn
    rows: tuple[NotAConvolutionRow, ...] = field(default_factory=tuple)

    @property
    def all_differ(self) -> bool:
        return all(r.differs for r in self.rows)

    def lines(self) -> list[str]:
        out = [f"f = {self.f}", f"g = {self.g}"]
        for r in self.rows:
            rel = "!=" if r.differs else "=="
            out.append(
                f"combiner={r.combiner} carrier={r.carrier}: "
                f"convolution(1) = {r.convolution_at_one} {rel} {r.star_at_one} = star(1)"
            )
        out.append("star is NOT a convolution" if self.all_differ else "no separation found")
        return out


def counterexample_q2(tnorms=BUILTIN_TNORMS) -> NotAConvolutionReport:
    """Compare ``(f ✶ g)(1)`` with the value at 1 of every convolution
    drawn from ``tnorms`` x ``tnorms``, for ``f = 1_[0,1]`` and the tent."""
    f, g = TOP, tent()
    at_one = star(f, g).values[-1]
    rows = []
    for comb, car in product(tnorms, repeat=2):
        spec = ConvolutionSpec(get_tnorm(comb), get_tnorm(car))
        rows.append(NotAConvolutionRow(comb, car, convolution_at_one(spec, f, g), at_one))
    return NotAConvolutionReport(f, g, tuple(rows))
