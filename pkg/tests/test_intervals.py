from fractions import Fraction as F
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import rationals
from t2fuzzy import intervals as iv
from t2fuzzy.errors import DomainError, PreconditionError
from t2fuzzy.intervals import FULL, TOP, Interval
from t2fuzzy.report import VIOLATED, decode_arg
from t2fuzzy.tnorms import get_tnorm

HALF = F(1, 2)


def I(a, b):
    return Interval(a, b)


@st.composite
def intervals(draw):
    a, b = draw(rationals()), draw(rationals())
    return Interval(min(a, b), max(a, b))


def test_validation():
    with pytest.raises(DomainError):
        I("0.6", "0.2")
    with pytest.raises(DomainError):
        I(0, 2)
    assert I("0.5", "0.5").degenerate
    assert str(I(0, HALF)) == "[0, 1/2]"


def test_lattice_examples():
    x, y = I("0.2", "0.6"), I("0.4", "0.5")
    assert iv.meet(x, y) == I("0.2", "0.5")
    assert iv.join(x, y) == I("0.4", "0.6")
    assert iv.meet(x, TOP) == x


def test_orders():
    assert iv.subset_order(I(HALF, HALF), I(HALF, 1))
    assert iv.leq_product(FULL, FULL)
    assert not iv.subset_order(I("0.2", "0.6"), I("0.3", "0.5"))


def test_circled_star_examples():
    assert iv.circled_star(I(HALF, HALF), I(HALF, HALF)) == Interval.point(F(1, 4))
    assert iv.circled_star(I(HALF, HALF), I(HALF, 1)) == Interval.point(HALF)
    x = I("0.2", "0.7")
    assert iv.circled_star(x, TOP) == Interval.point(x.hi)


@given(intervals(), intervals())
def test_circled_star_matches_corner_oracle(x, y):
    assert iv.circled_star(x, y) == iv.circled_star_corners(x, y)


@given(intervals(), intervals(), intervals())
def test_circled_star_associative(x, y, z):
    s = iv.circled_star
    assert s(s(x, y), z) == s(x, s(y, z)) == Interval.point(x.hi * y.hi * z.hi)


def test_interval_tnorm_examples():
    x, y = I("0.2", "0.6"), I("0.4", "0.5")
    assert iv.convolution_interval_tnorm(get_tnorm("min"), x, y) == I("0.2", "0.5")
    ab = I("0.3", "0.7")
    prod = get_tnorm("product")
    assert iv.convolution_interval_tnorm(prod, TOP, ab) == ab
    assert iv.convolution_interval_tnorm(prod, FULL, ab) == I(0, "0.7")
    with pytest.raises(PreconditionError):
        iv.convolution_interval_tnorm(get_tnorm("max"), x, y)


def test_conditions_for_circled_star():
    expect = {"1": VIOLATED, "6": VIOLATED, "5'": VIOLATED}
    rep = iv.check_interval_conditions(iv.circled_star, expect=expect)
    assert rep.passed
    status = {k: r.violations == 0 for k, r in rep.laws.items()}
    assert status == {"1": False, "2": True, "3": True, "4": True, "5": True,
                      "6": False, "7": True, "4'": True, "5'": False}
    x = decode_arg(rep.laws["1"].witness[0])
    assert iv.circled_star(TOP, x) != x


def test_documented_failures_of_one_and_six():
    x = I("0.2", "0.6")
    assert iv.circled_star(TOP, x) == Interval.point("0.6") != x
    a, b = F(1, 4), F(3, 4)
    assert iv.circled_star(FULL, I(a, b)) == Interval.point(b)


@pytest.mark.parametrize("name", ["min", "product", "lukasiewicz"])
def test_conditions_for_interval_tnorms(name):
    rep = iv.check_interval_conditions(iv.interval_tnorm(get_tnorm(name)))
    assert rep.passed
    assert all(r.violations == 0 for r in rep.laws.values())


def test_lattice_is_distributive_on_grid():
    grid = iv.probe_grid()
    for x, y, z in product(grid, repeat=3):
        assert iv.meet(x, iv.join(y, z)) == iv.join(iv.meet(x, y), iv.meet(x, z))
        assert iv.join(x, iv.meet(x, y)) == x


def test_single_point_examples():
    with pytest.raises(PreconditionError):
        iv.single_point_factor_meet(I("0.3", "0.3"), I("0.2", "0.9"))
    assert iv.single_point_factor_meet(I(HALF, HALF), I(HALF, 1)) == 0


def test_single_point_exhaustive_on_six_values():
    grid = iv.probe_grid([F(k, 5) for k in range(6)])
    joins = meets = 0
    for x, y in product(grid, repeat=2):
        if iv.join(x, y).degenerate:
            assert (x, y)[iv.single_point_factor_join(x, y)].degenerate
            joins += 1
        if iv.meet(x, y).degenerate:
            assert (x, y)[iv.single_point_factor_meet(x, y)].degenerate
            meets += 1
    assert joins and meets


def test_probe_grid_size():
    assert len(iv.probe_grid()) == 15
