"""Exact algebra of piecewise-linear type-2 fuzzy truth values.

The core objects are :class:`PiecewiseFn` (maps [0, 1] -> [0, 1] with
explicit one-sided limits), the convolution operations on them, and the
operation ``star`` on normal convex functions.
"""

from .convolution import (
    BOTTOM,
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
from .errors import (
    DocumentError,
    DomainError,
    EmptyIntervalError,
    NotInLError,
    NotNormalError,
    PreconditionError,
    T2FuzzyError,
    UnknownNameError,
)
from .intervals import Interval, circled_star, subset_order
from .pwl import (
    PiecewiseFn,
    balance_data,
    constant,
    convex_profile,
    eval_at,
    from_breakpoints,
    in_L,
    indicator,
    is_convex,
    is_normal,
    left_envelope,
    level_one_left,
    level_one_right,
    polyline,
    right_envelope,
    singleton,
    sup_on,
    weak_left_envelope,
    weak_right_envelope,
)
from .tnorms import ScalarTNorm, get_tnorm
from .verify import GeneratorConfig, oracle_convolution, run_suite

__version__ = "0.1.0"
