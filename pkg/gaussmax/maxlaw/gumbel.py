# Copyright (c) gauss-maxima developers. All rights reserved.
"""Gumbel calibration of the i.i.d. Gaussian maximum.

With ``b_p = sqrt(2 log p)`` and ``d_p = b_p - (log(4 pi) + log log p) / (2 b_p)``
the rescaled maximum ``b_p (max_j X_j - d_p)`` tends to the standard Gumbel law
``G(x) = exp(-exp(-x))``. Convergence is slow, on the order of ``1 / log p``.
"""
import math
from dataclasses import dataclass

import numpy as np
from scipy import stats

from gaussmax.data.utils.exceptions import POutOfRange

from .normal import log_norm_cdf, log_norm_pdf

# x-range where the calibrated CDF gap is evaluated; both laws are flat outside
GAP_GRID = np.linspace(-6.0, 12.0, 18001)


@dataclass(frozen=True)
class GumbelCalibration:
    p: float
    b_p: float
    d_p: float

    def rescale(self, maxima):
        """``b_p (max - d_p)``."""
        return self.b_p * (np.asarray(maxima, dtype=np.float64) - self.d_p)

    def to_dict(self):
        return {'p': self.p, 'b_p': self.b_p, 'd_p': self.d_p}


def gumbel_calibration(p) -> GumbelCalibration:
    if not p >= 3:
        raise POutOfRange(f'Gumbel calibration needs p >= 3, got {p}')
    log_p = math.log(p)
    b_p = math.sqrt(2 * log_p)
    d_p = b_p - (math.log(4 * math.pi) + math.log(log_p)) / (2 * b_p)
    return GumbelCalibration(p=p, b_p=b_p, d_p=d_p)


def gumbel_cdf(x):
    return stats.gumbel_r.cdf(x)


def gumbel_density(x):
    return stats.gumbel_r.pdf(x)


def calibrated_max_cdf(x, p):
    """Exact CDF ``Phi(d_p + x / b_p)^p`` of ``b_p (max - d_p)``."""
    cal = gumbel_calibration(p)
    u = cal.d_p + np.asarray(x, dtype=np.float64) / cal.b_p
    return np.exp(p * log_norm_cdf(u))


def gumbel_approx_density(x, p):
    """Density ``(p / b_p) phi(d_p + x/b_p) Phi(d_p + x/b_p)^(p-1)`` of ``b_p (max - d_p)``."""
    cal = gumbel_calibration(p)
    u = cal.d_p + np.asarray(x, dtype=np.float64) / cal.b_p
    log_density = math.log(p) - math.log(cal.b_p) + log_norm_pdf(u) + (p - 1) * log_norm_cdf(u)
    out = np.exp(log_density)
    return out if np.ndim(out) else float(out)


def gumbel_cdf_gap(p, x_grid=None) -> float:
    """``sup_x |Phi(d_p + x/b_p)^p - G(x)|`` over a fine grid."""
    x_grid = GAP_GRID if x_grid is None else np.asarray(x_grid, dtype=np.float64)
    return float(np.max(np.abs(calibrated_max_cdf(x_grid, p) - gumbel_cdf(x_grid))))
