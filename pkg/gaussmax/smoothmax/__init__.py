from .smooth_max import (
    DENSE_HESSIAN_MAX_DIM,
    SmoothMaxEval,
    composite_gradient,
    composite_hessian,
    smooth_max,
    smooth_max_batch,
)
from .smoother import (
    SmootherParams,
    g0_norms,
    smoother_g0,
    smoother_g0_derivative,
    smoother_gxbd,
    smoother_gxbd_derivative,
)

__all__ = [
    "DENSE_HESSIAN_MAX_DIM",
    "SmoothMaxEval",
    "SmootherParams",
    "composite_gradient",
    "composite_hessian",
    "g0_norms",
    "smooth_max",
    "smooth_max_batch",
    "smoother_g0",
    "smoother_g0_derivative",
    "smoother_gxbd",
    "smoother_gxbd_derivative",
]
