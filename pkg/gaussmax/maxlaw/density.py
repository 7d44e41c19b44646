# Copyright (c) gauss-maxima developers. All rights reserved.
"""Densities of Gaussian maxima and the monotone density-factor property."""
import math
from dataclasses import dataclass, field

import numpy as np

from gaussmax.core.covariance import CovarianceSpec
from gaussmax.core.sampler import GaussianSampler
from gaussmax.data.utils.exceptions import NonPositiveInput, RhoOutOfRange

from .normal import norm_cdf, norm_pdf
from .sample_set import SampleSet

MONOTONE_TOLERANCE = 1e-12


def max_density_bivariate(x, rho: float):
    """Density of ``max(X1, X2)`` for unit variances and correlation ``rho``.

    ``f(x) = 2 phi(x) Phi(x sqrt((1 - rho) / (1 + rho)))``, since given
    ``X1 = x`` the event ``X2 <= x`` has probability ``Phi((x - rho x) / sqrt(1 - rho^2))``.
    """
    if not -1 < rho < 1:
        raise RhoOutOfRange(f'rho must be in (-1, 1), got {rho}')
    x = np.asarray(x, dtype=np.float64)
    out = 2 * norm_pdf(x) * norm_cdf(x * math.sqrt((1 - rho) / (1 + rho)))
    return out if out.ndim else float(out)


def max_density_mc(x, spec: CovarianceSpec, n_draws: int, seed: int):
    """Monte Carlo density of ``max_j X_j`` for any covariance.

    Uses ``f(x) = sum_j phi_j(x) P(V_k + c_kj x <= x for all k != j)`` with
    ``c_kj = sigma_kj / sigma_jj`` and ``V = X - c_.j X_j`` independent of ``X_j``.
    The conditional orthant probabilities are estimated from one shared batch
    of draws.

    Returns:
        tuple[np.ndarray, np.ndarray]: density and its standard error on ``x``.
    """
    if n_draws < 2:
        raise NonPositiveInput(f'n_draws must be >= 2, got {n_draws}')
    x = np.atleast_1d(np.asarray(x, dtype=np.float64))
    draws = GaussianSampler(spec, seed).sample(n_draws)
    variances = np.diag(spec.entries)
    per_draw = np.zeros((n_draws, x.size))
    for j in range(spec.dim):
        if variances[j] <= 0:
            continue
        sigma_j = math.sqrt(variances[j])
        slopes = spec.entries[:, j] / variances[j]
        residual = draws - np.outer(draws[:, j], slopes)
        others = np.arange(spec.dim) != j
        if not np.any(others):
            per_draw += norm_pdf(x / sigma_j)[None, :] / sigma_j
            continue
        # threshold_k(x) = x - c_kj x for every k != j
        thresholds = x[None, :] * (1.0 - slopes[others])[:, None]
        below = np.all(residual[:, others][:, :, None] <= thresholds[None, :, :], axis=1)
        per_draw += below * (norm_pdf(x / sigma_j) / sigma_j)[None, :]
    density = per_draw.mean(axis=0)
    standard_error = per_draw.std(axis=0, ddof=1) / math.sqrt(n_draws)
    return density, standard_error


def max_density_histogram(samples: SampleSet, bins: int = 50, value_range=None):
    """Histogram density estimate with binomial standard errors per bin.

    Returns:
        tuple[np.ndarray, np.ndarray, np.ndarray]: bin centers, density, standard error.
    """
    counts, edges = np.histogram(samples.draws, bins=bins, range=value_range)
    widths = np.diff(edges)
    share = counts / samples.size
    density = share / widths
    standard_error = np.sqrt(share * (1 - share) / samples.size) / widths
    centers = (edges[:-1] + edges[1:]) / 2
    return centers, density, standard_error


def conditional_below_probability(x, rho: float, mu0: float, mu1: float = 0.0):
    """``P(W1 <= x | W0 = x)`` for unit-variance ``W0 ~ N(mu0, 1)``, ``W1 ~ N(mu1, 1)``."""
    x = np.asarray(x, dtype=np.float64)
    if not -1 <= rho <= 1:
        raise RhoOutOfRange(f'rho must be in [-1, 1], got {rho}')
    if rho == 1:
        return np.full_like(x, 1.0 if mu1 <= mu0 else 0.0)
    if rho == -1:
        return (x >= (mu0 + mu1) / 2).astype(np.float64)
    return norm_cdf((x - mu1 - rho * (x - mu0)) / math.sqrt(1 - rho * rho))


@dataclass(slots=True)
class MonotonicityReport:
    max_decrease: float
    tolerance: float
    cases: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.max_decrease <= self.tolerance

    def to_dict(self):
        return {
            'max_decrease': self.max_decrease,
            'tolerance': self.tolerance,
            'passed': self.passed,
            'cases': list(self.cases),
        }


def monotone_density_factor_check(rho_grid, x_grid, mu0_grid=(0.0, 0.5, 1.0), mu1: float = 0.0,
                                  tolerance: float = MONOTONE_TOLERANCE) -> MonotonicityReport:
    """Check that ``x -> exp(mu0 x - mu0^2/2) P(W1 <= x | W0 = x)`` never decreases on ``x_grid``."""
    x = np.sort(np.asarray(x_grid, dtype=np.float64))
    cases = []
    worst = 0.0
    for rho in rho_grid:
        for mu0 in mu0_grid:
            factor = np.exp(mu0 * x - mu0 * mu0 / 2) * conditional_below_probability(x, rho, mu0, mu1)
            decrease = float(max(0.0, np.max(factor[:-1] - factor[1:]))) if x.size > 1 else 0.0
            worst = max(worst, decrease)
            cases.append({'rho': float(rho), 'mu0': float(mu0), 'max_decrease': decrease})
    return MonotonicityReport(max_decrease=worst, tolerance=tolerance, cases=cases)
