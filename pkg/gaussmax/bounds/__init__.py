from .anticoncentration import (
    anticonc_equal,
    anticonc_explicit,
    anticonc_location,
    anticonc_simple,
    anticonc_single,
    ap_envelope,
    ball_bound,
    gaussian_concentration,
    gaussian_tail,
)
from .comparison import (
    comparison_max,
    comparison_optimized,
    comparison_smooth,
    kolmogorov_explicit,
    kolmogorov_shape,
    sudakov_fernique,
)
from .maximal import case_b_rate, deltahat_bound, maximal_inequality, maximal_nonnegative
from .registry import FORMULA_REGISTRY, evaluate, evaluate_with_constant
from .report import BoundReport

__all__ = [
    "BoundReport",
    "FORMULA_REGISTRY",
    "anticonc_equal",
    "anticonc_explicit",
    "anticonc_location",
    "anticonc_simple",
    "anticonc_single",
    "ap_envelope",
    "ball_bound",
    "case_b_rate",
    "comparison_max",
    "comparison_optimized",
    "comparison_smooth",
    "deltahat_bound",
    "evaluate",
    "evaluate_with_constant",
    "gaussian_concentration",
    "gaussian_tail",
    "kolmogorov_explicit",
    "kolmogorov_shape",
    "maximal_inequality",
    "maximal_nonnegative",
    "sudakov_fernique",
]
