from fractions import Fraction

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from t2fuzzy.pwl import ONE, ZERO, from_breakpoints, left_envelope, pointwise_min, right_envelope

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

DENOMS = (1, 2, 3, 4, 5, 8)


def rationals(lo=0, hi=1):
    lo, hi = Fraction(lo), Fraction(hi)
    return st.sampled_from(DENOMS).flatmap(
        lambda d: st.integers(int(-(-lo * d // 1)), int(hi * d // 1)).map(lambda k: Fraction(k, d))
    )


@st.composite
def functions(draw, max_inner=4, normal=False):
    """Arbitrary piecewise-linear maps with jumps (elements of M)."""
    inner = draw(st.sets(rationals().filter(lambda x: 0 < x < 1), max_size=max_inner))
    xs = [ZERO, *sorted(inner), ONE]
    recs = []
    for x in xs:
        v = draw(rationals())
        if draw(st.booleans()):
            l = r = v
        else:
            l, r = draw(rationals()), draw(rationals())
        recs.append([x, l, v, r])
    if normal:
        i = draw(st.integers(0, len(xs) - 1))
        slots = [s for s in (1, 2, 3) if not (i == 0 and s == 1) and not (i == len(xs) - 1 and s == 3)]
        recs[i][draw(st.sampled_from(slots))] = ONE
    recs[0][1] = recs[0][2]
    recs[-1][3] = recs[-1][2]
    return from_breakpoints(recs)


@st.composite
def l_functions(draw, max_inner=4):
    """Normal convex functions: the convex hull of a random normal map."""
    h = draw(functions(max_inner, normal=True))
    return pointwise_min(left_envelope(h), right_envelope(h))
