# Copyright (c) gauss-maxima developers. All rights reserved.
"""The C^2 step ``g0`` and its shifted, rescaled version ``g_{x,beta,delta}``.

``g0(t) = 30 * int_t^1 s^2 (1 - s)^2 ds`` on ``[0, 1]``, which expands to the
quintic ``1 - (10 t^3 - 15 t^4 + 6 t^5)``; it is 1 left of 0 and 0 right of 1.
"""
from dataclasses import dataclass

import numpy as np

from gaussmax.data.utils.exceptions import NonPositiveParameter, POutOfRange

G0_SUP_FIRST = 30.0 / 16.0
G0_SUP_SECOND = 10.0 / np.sqrt(3.0)


def smoother_g0(t):
    t = np.asarray(t, dtype=np.float64)
    inner = np.clip(t, 0.0, 1.0)
    poly = 1.0 - inner ** 3 * (10.0 - 15.0 * inner + 6.0 * inner ** 2)
    out = np.where(t <= 0.0, 1.0, np.where(t >= 1.0, 0.0, np.clip(poly, 0.0, 1.0)))
    return out if out.ndim else float(out)


def smoother_g0_derivative(t, order: int = 1):
    t = np.asarray(t, dtype=np.float64)
    inner = np.clip(t, 0.0, 1.0)
    if order == 1:
        out = -30.0 * inner ** 2 * (1.0 - inner) ** 2
    elif order == 2:
        out = -60.0 * inner * (1.0 - inner) * (1.0 - 2.0 * inner)
    else:
        raise ValueError(f'order must be 1 or 2, got {order}')
    return out if out.ndim else float(out)


def g0_norms() -> tuple[float, float]:
    """``(sup |g0'|, sup |g0''|)``, attained at 1/2 and at ``1/2 +- 1/(2 sqrt 3)``."""
    return G0_SUP_FIRST, float(G0_SUP_SECOND)


@dataclass(frozen=True)
class SmootherParams:
    x: float
    beta: float
    delta: float

    def __post_init__(self):
        if not self.beta > 0:
            raise NonPositiveParameter(f'beta must be positive, got {self.beta}')
        if not self.delta > 0:
            raise NonPositiveParameter(f'delta must be positive, got {self.delta}')

    def e_beta(self, p: int) -> float:
        if p < 1:
            raise POutOfRange(f'p must be >= 1, got {p}')
        return float(np.log(p) / self.beta)

    def argument(self, t, p: int):
        return (np.asarray(t, dtype=np.float64) - self.x - self.e_beta(p)) / self.delta


def smoother_gxbd(t, params: SmootherParams, p: int):
    """``g0((t - x - e_beta) / delta)``: 1 up to ``x + e_beta`` and 0 from ``x + e_beta + delta``."""
    return smoother_g0(params.argument(t, p))


def smoother_gxbd_derivative(t, params: SmootherParams, p: int, order: int = 1):
    return smoother_g0_derivative(params.argument(t, p), order) / params.delta ** order
