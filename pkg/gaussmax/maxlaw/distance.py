# Copyright (c) gauss-maxima developers. All rights reserved.
import math
from typing import Callable

import numpy as np

from gaussmax.data.utils.exceptions import EmptyInput, NonPositiveEpsilon, NonPositiveSigma

from .normal import norm_cdf
from .sample_set import SampleSet

# 95% quantile of the limiting Kolmogorov distribution
KS_95 = 1.36


def dkw_allowance(r: int) -> float:
    """One-sample 95% allowance ``1.36 / sqrt(R)``."""
    return KS_95 / math.sqrt(r)


def two_sample_allowance(r: int) -> float:
    """``2 * 1.36 / sqrt(R)``: one DKW allowance per empirical law."""
    return 2 * KS_95 / math.sqrt(r)


def _draws(samples) -> np.ndarray:
    if isinstance(samples, SampleSet):
        return samples.draws
    draws = np.sort(np.asarray(samples, dtype=np.float64).ravel())
    if draws.size == 0:
        raise EmptyInput('no draws')
    return draws


def levy_concentration(samples, epsilon: float) -> float:
    """Largest empirical mass of a closed window ``[s, s + 2 eps]``.

    A maximizing window can always be slid right until its left end hits a
    draw, so checking windows that start at each draw is exact for the ECDF.
    """
    if not epsilon > 0:
        raise NonPositiveEpsilon(f'epsilon must be > 0, got {epsilon}')
    draws = _draws(samples)
    left = np.searchsorted(draws, draws, side='left')
    right = np.searchsorted(draws, draws + 2 * epsilon, side='right')
    return float(np.max(right - left) / draws.size)


def kolmogorov_distance(a, b: 'SampleSet | np.ndarray | Callable') -> float:
    """Exact sup distance between an ECDF and another ECDF or an analytic CDF.

    For two samples both ECDFs are right-continuous step functions, so the sup
    is attained at one of the merged jump points. Against a continuous CDF both
    one-sided limits of the ECDF are checked at every jump.
    """
    xs = _draws(a)
    if callable(b) and not isinstance(b, SampleSet):
        n = xs.size
        cdf = np.asarray(b(xs), dtype=np.float64)
        after = np.arange(1, n + 1) / n
        before = np.arange(0, n) / n
        return float(max(np.max(after - cdf), np.max(cdf - before), 0.0))
    ys = _draws(b)
    points = np.concatenate([xs, ys])
    cdf_x = np.searchsorted(xs, points, side='right') / xs.size
    cdf_y = np.searchsorted(ys, points, side='right') / ys.size
    return float(np.max(np.abs(cdf_x - cdf_y)))


def normal_scale_ks(s1: float, s2: float) -> float:
    """Kolmogorov distance between ``N(0, s1^2)`` and ``N(0, s2^2)``.

    The CDFs cross only at 0; the gap peaks where the densities meet,
    ``x^2 = 2 log(s1/s2) s1^2 s2^2 / (s1^2 - s2^2)``.
    """
    if not (s1 > 0 and s2 > 0):
        raise NonPositiveSigma(f'scales must be > 0, got {s1} and {s2}')
    if s1 == s2:
        return 0.0
    x = math.sqrt(2 * math.log(s1 / s2) * s1 * s1 * s2 * s2 / (s1 * s1 - s2 * s2))
    return float(abs(norm_cdf(x / s1) - norm_cdf(x / s2)))
