# Copyright (c) gauss-maxima developers. All rights reserved.
from dataclasses import dataclass

import numpy as np

from gaussmax.data.utils.exceptions import EmptyVector, NonFiniteEntries, NonPositiveBeta

# above this dimension w_jk is only available through hessian_apply
DENSE_HESSIAN_MAX_DIM = 512


@dataclass(frozen=True, eq=False)
class SmoothMaxEval:
    """``F_beta(z)`` together with its first and second order weights.

    ``weights`` is the gradient of ``F_beta`` (a probability vector) and
    ``beta * hessian_scale`` is its Hessian.
    """
    beta: float
    value: float
    weights: np.ndarray
    hessian_scale: np.ndarray | None
    slack: float
    z_max: float

    @property
    def dim(self) -> int:
        return int(self.weights.shape[0])

    def hessian_apply(self, v) -> np.ndarray:
        """``w @ v`` without forming ``w``."""
        v = np.asarray(v, dtype=np.float64)
        pi = self.weights
        return pi * v - pi * (pi @ v)

    def dense_hessian_scale(self) -> np.ndarray:
        if self.hessian_scale is not None:
            return self.hessian_scale
        return _hessian_scale(self.weights)

    def hessian_abs_sum(self) -> float:
        pi = self.weights
        total = float(pi.sum())
        square = float(pi @ pi)
        return (total - square) + (total * total - square)


def _hessian_scale(pi: np.ndarray) -> np.ndarray:
    return np.diag(pi) - np.outer(pi, pi)


def _validate(z, beta) -> np.ndarray:
    z = np.asarray(z, dtype=np.float64)
    if z.size == 0 or z.shape[-1] == 0:
        raise EmptyVector('smooth max needs at least one coordinate')
    if not (np.isfinite(beta) and beta > 0):
        raise NonPositiveBeta(f'beta must be positive and finite, got {beta}')
    if not np.all(np.isfinite(z)):
        raise NonFiniteEntries('smooth max input has NaN or infinite entries')
    return z


def _pull_into_sandwich(values: np.ndarray, z_max: np.ndarray, slack: float) -> np.ndarray:
    # rounding of ``max + gap`` may push the gap one ulp past the slack
    over = values - z_max > slack
    while np.any(over):
        values[over] = np.nextafter(values[over], -np.inf)
        over = values - z_max > slack
    return values


def smooth_max_batch(z, beta: float):
    """Row-wise ``F_beta`` and weights of an ``R x p`` array.

    Returns:
        tuple[np.ndarray, np.ndarray]: values of shape ``(R,)`` and weights of
        shape ``(R, p)``.
    """
    z = np.atleast_2d(_validate(z, beta))
    p = z.shape[1]
    z_max = z.max(axis=1)
    e = np.exp(beta * (z - z_max[:, None]))
    s = e.sum(axis=1)
    values = z_max + np.log(s) / beta
    slack = np.log(p) / beta
    values = _pull_into_sandwich(values, z_max, slack)
    return values, e / s[:, None]


def smooth_max(z, beta: float) -> SmoothMaxEval:
    """Evaluate the smooth max ``beta^-1 log sum_j exp(beta z_j)`` with the max shift.

    Raises:
        EmptyVector: ``z`` has no coordinates.
        NonPositiveBeta: ``beta`` is not a positive finite number.
    """
    z = _validate(z, beta).ravel()
    values, weights = smooth_max_batch(z[None, :], beta)
    pi = weights[0]
    p = pi.shape[0]
    hessian_scale = _hessian_scale(pi) if p <= DENSE_HESSIAN_MAX_DIM else None
    return SmoothMaxEval(
        beta=float(beta),
        value=float(values[0]),
        weights=pi,
        hessian_scale=hessian_scale,
        slack=float(np.log(p) / beta),
        z_max=float(z.max()),
    )


def composite_gradient(ev: SmoothMaxEval, g_first: float) -> np.ndarray:
    """Gradient of ``g(F_beta(z))`` given ``g'(F_beta(z))``."""
    return g_first * ev.weights


def composite_hessian(ev: SmoothMaxEval, g_first: float, g_second: float) -> np.ndarray:
    """Hessian of ``g(F_beta(z))``: ``g''(F) pi pi^T + beta g'(F) w``."""
    pi = ev.weights
    return g_second * np.outer(pi, pi) + ev.beta * g_first * ev.dense_hessian_scale()
