from fractions import Fraction as F

import pytest
from hypothesis import given

from conftest import functions, l_functions, rationals
from t2fuzzy.convolution import (
    BOTTOM,
    JOIN_SPEC,
    MEET_SPEC,
    TOP,
    UNIT,
    ConvolutionSpec,
    bar_meet,
    convolution_at_one,
    general_convolution,
    join_conv,
    meet_conv,
    negation,
    order_join,
    order_meet,
    star,
)
from t2fuzzy.errors import NotInLError, PreconditionError
from t2fuzzy.pwl import (
    eval_at,
    from_breakpoints,
    indicator,
    left_envelope,
    pointwise_max,
    pointwise_min,
    polyline,
    right_envelope,
    singleton,
    with_value_at,
)
from t2fuzzy.tnorms import get_tnorm
from t2fuzzy.verify import oracle_convolution

HALF = F(1, 2)
TENT = polyline([(0, 0), (HALF, 1), (1, HALF)])


def grid_for(f, g, n=20):
    return sorted({F(k, n) for k in range(n + 1)} | set(f.xs) | set(g.xs))


def closed_form_matches_oracle(spec, op, f, g):
    pts = grid_for(f, g)
    h = op(f, g)
    return [(x, h(x)) for x in pts] == oracle_convolution(spec, f, g, pts)


class TestMeetJoin:
    @pytest.mark.parametrize("a,b", [(0, 1), ("1/5", "3/5"), ("1/2", "1/2"), (1, 1)])
    def test_top_meet_interval(self, a, b):
        assert meet_conv(TOP, indicator(a, b)) == indicator(0, b)

    def test_tent_meet_top_is_right_envelope(self):
        assert meet_conv(TENT, TOP) == right_envelope(TENT)
        pts = [F(k, 100) for k in range(101)]
        want = oracle_convolution(MEET_SPEC, TENT, TOP, pts)
        assert [(x, right_envelope(TENT)(x)) for x in pts] == want

    @given(functions())
    def test_neutral_elements(self, f):
        assert meet_conv(f, UNIT) == f
        assert join_conv(f, BOTTOM) == f

    @given(rationals(), rationals(), rationals(), rationals())
    def test_join_of_intervals(self, a1, b1, a2, b2):
        a1, b1 = min(a1, b1), max(a1, b1)
        a2, b2 = min(a2, b2), max(a2, b2)
        got = join_conv(indicator(a1, b1), indicator(a2, b2))
        assert got == indicator(max(a1, a2), max(b1, b2))
        assert closed_form_matches_oracle(JOIN_SPEC, join_conv, indicator(a1, b1), indicator(a2, b2))

    @given(rationals(), rationals())
    def test_join_of_points(self, x1, x2):
        assert join_conv(singleton(x1), singleton(x2)) == singleton(max(x1, x2))

    def test_oracle_examples(self):
        k = indicator("0.2", "0.7")
        assert closed_form_matches_oracle(MEET_SPEC, meet_conv, TENT, k)
        assert closed_form_matches_oracle(JOIN_SPEC, join_conv, TENT, k)

    @given(functions(max_inner=3), functions(max_inner=3))
    def test_closed_forms_match_oracle_on_M(self, f, g):
        assert closed_form_matches_oracle(MEET_SPEC, meet_conv, f, g)
        assert closed_form_matches_oracle(JOIN_SPEC, join_conv, f, g)

    @given(l_functions(), l_functions())
    def test_envelope_lemma(self, f, g):
        m, j = meet_conv(f, g), join_conv(f, g)
        assert left_envelope(m) == pointwise_max(left_envelope(f), left_envelope(g))
        assert right_envelope(m) == pointwise_min(right_envelope(f), right_envelope(g))
        assert left_envelope(j) == pointwise_min(left_envelope(f), left_envelope(g))
        assert right_envelope(j) == pointwise_max(right_envelope(f), right_envelope(g))


class TestNegation:
    def test_interval(self):
        assert negation(indicator("1/5", "1/2")) == indicator("1/2", "4/5")

    def test_tent(self):
        want = polyline([(0, HALF), (HALF, 1), (1, 0)])
        assert negation(TENT) == want
        for k in range(21):
            x = F(k, 20)
            assert negation(TENT)(x) == (x + HALF if x < HALF else 2 - 2 * x)

    @given(functions(), functions())
    def test_de_morgan(self, f, g):
        assert negation(negation(f)) == f
        assert negation(join_conv(f, g)) == meet_conv(negation(f), negation(g))


class TestStar:
    def test_bar_meet(self):
        assert bar_meet(TOP, TENT)(1) == 0
        assert bar_meet(TOP, indicator("1/4", "1/2")) == indicator(0, "1/2")
        assert bar_meet(TOP, TENT) == with_value_at(meet_conv(TOP, TENT), 1, 0)

    @pytest.mark.parametrize("a,b", [(0, 1), ("1/5", "3/5"), ("1/3", "1/3"), (1, 1), (0, 0)])
    def test_top_star_interval(self, a, b):
        assert star(TOP, indicator(a, b)) == indicator(0, b)

    def test_unit(self):
        assert star(TENT, UNIT) == TENT == star(UNIT, TENT)

    def test_tent_counterexample(self):
        assert star(TOP, TENT)(1) == 0
        assert star(TOP, TENT) == from_breakpoints(
            [(0, None, 1, 1), (HALF, 1, 1, 1), (1, HALF, 0, None)]
        )

    def test_requires_L(self):
        two = pointwise_max(indicator(0, "0.4"), indicator("0.6", 1))
        with pytest.raises(NotInLError):
            star(two, TOP)
        with pytest.raises(NotInLError):
            star(TOP, from_breakpoints([(0, None, HALF, HALF), (1, HALF, HALF, None)]))

    @given(l_functions())
    def test_unit_overlap_agrees(self, f):
        assert meet_conv(UNIT, f) == f == star(UNIT, f)


class TestGeneral:
    def test_min_min_matches_meet(self):
        spec = ConvolutionSpec.named("min", "min")
        pts = general_convolution(spec, TENT, TOP, 20)
        assert pts == [(x, meet_conv(TENT, TOP)(x)) for x, _ in pts]

    def test_product_spike(self):
        spec = ConvolutionSpec.named("product", "product")
        s = singleton(HALF)
        pts = dict(general_convolution(spec, s, s, 20))
        assert pts[F(1, 4)] == 1
        assert sum(1 for v in pts.values() if v) == 1

    def test_product_min_at_one(self):
        spec = ConvolutionSpec.named("product", "min")
        for n in (4, 10, 20, 50):
            assert dict(general_convolution(spec, TOP, TENT, n))[F(1)] == HALF

    def test_lukasiewicz_carrier_stays_on_grid(self):
        spec = ConvolutionSpec.named("min", "lukasiewicz")
        pts = dict(general_convolution(spec, TOP, TOP, 10))
        assert all(v == 1 for v in pts.values())

    def test_resolution_checked(self):
        with pytest.raises(ValueError):
            general_convolution(MEET_SPEC, TENT, TENT, 1)

    def test_direction_must_match_carrier(self):
        with pytest.raises(PreconditionError):
            ConvolutionSpec(get_tnorm("min"), get_tnorm("max"), "norm")
        assert ConvolutionSpec.named("min", "max").direction == "conorm"


class TestAtOne:
    def test_examples(self):
        spec = ConvolutionSpec.named("product", "min")
        assert convolution_at_one(spec, TOP, TENT) == HALF
        luk = ConvolutionSpec.named("lukasiewicz", "product")
        f = with_value_at(TOP, 1, "0.7")
        g = with_value_at(TOP, 1, "0.5")
        assert convolution_at_one(luk, f, g) == F(1, 5)

    @pytest.mark.parametrize("name", ["min", "product", "lukasiewicz", "drastic"])
    def test_one_at_one(self, name):
        spec = ConvolutionSpec.named(name, "min")
        assert convolution_at_one(spec, TOP, indicator(HALF, 1)) == 1

    def test_needs_tnorm_carrier(self):
        with pytest.raises(PreconditionError):
            convolution_at_one(JOIN_SPEC, TOP, TENT)


class TestOrders:
    @given(l_functions())
    def test_bounds(self, f):
        assert order_meet(f, UNIT) and order_meet(BOTTOM, f)
        assert order_join(f, UNIT) and order_join(BOTTOM, f)

    @given(rationals(), rationals())
    def test_intervals(self, a, b):
        a, b = min(a, b), max(a, b)
        assert order_meet(indicator(0, b), indicator(a, b))
        assert order_meet(indicator(0, b), indicator(a, b), "definition")

    @given(l_functions(), l_functions())
    def test_orders_coincide_on_L(self, f, g):
        for a, b in ((f, g), (meet_conv(f, g), g)):
            d = order_meet(a, b, "definition")
            assert d == order_meet(a, b, "envelope") == order_join(a, b)

    def test_envelope_needs_L(self):
        with pytest.raises(PreconditionError):
            order_meet(TENT, with_value_at(TENT, HALF, 0), "envelope")
        with pytest.raises(ValueError):
            order_meet(TENT, TENT, "magic")


def test_oracle_rejects_other_carriers():
    spec = ConvolutionSpec.named("min", "product")
    with pytest.raises(PreconditionError):
        oracle_convolution(spec, TENT, TOP, [0, HALF, 1])
    with pytest.raises(PreconditionError, match="misses"):
        oracle_convolution(MEET_SPEC, TENT, TOP, [0, 1])


def test_eval_consistency():
    assert eval_at(meet_conv(TENT, TOP), F(3, 4)) == F(3, 4)
