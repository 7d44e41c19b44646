# Copyright (c) gauss-maxima developers. All rights reserved.
"""Exact law of the maximum of ``p`` i.i.d. standard normals."""
import math

import numpy as np

from gaussmax.core.sampler import make_rng
from gaussmax.data.utils.exceptions import NonPositiveInput, POutOfRange

from .normal import log_norm_cdf, log_norm_pdf, norm_isf
from .sample_set import SampleSet


def _check_p(p, minimum=1):
    if not p >= minimum:
        raise POutOfRange(f'p must be >= {minimum}, got {p}')


def iid_max_cdf(x, p):
    """``Phi(x)^p`` evaluated as ``exp(p log Phi(x))``."""
    _check_p(p)
    out = np.exp(p * log_norm_cdf(x))
    return out if np.ndim(out) else float(out)


def iid_max_pdf(x, p):
    """``p phi(x) Phi(x)^(p-1)``."""
    _check_p(p)
    log_density = math.log(p) + log_norm_pdf(x)
    if p != 1:
        log_density = log_density + (p - 1) * log_norm_cdf(x)
    out = np.exp(log_density)
    return out if np.ndim(out) else float(out)


def iid_max_draws(p, r: int, seed: int) -> np.ndarray:
    """``r`` exact draws of the maximum by inversion, without drawing ``p`` normals.

    ``max <= x`` iff ``U^(1/p) <= Phi(x)``, so the draw is the upper normal
    quantile at ``1 - U^(1/p) = -expm1(log(U) / p)``, which stays accurate for
    ``p`` in the millions.
    """
    _check_p(p)
    if r < 1:
        raise NonPositiveInput(f'r must be >= 1, got {r}')
    u = make_rng(seed).random(r)
    # random() is in [0, 1), so log1p(-u) is finite; u == 0 would give an infinite draw
    upper_tail = np.maximum(-np.expm1(np.log1p(-u) / p), np.finfo(np.float64).tiny)
    return norm_isf(upper_tail)


def iid_max_quantile_draws(p, r: int, seed: int, experiment_id: str = 'iid_max') -> SampleSet:
    return SampleSet.from_draws(iid_max_draws(p, r, seed), seed=seed, experiment_id=experiment_id)
