# Copyright (c) gauss-maxima developers. All rights reserved.
"""Synthetic datasets for the bootstrap experiments.

Every generator returns the dataset together with the population second
moments ``n^-1 sum_i E[Z_i Z_i^T]`` it was drawn from.
"""
import math

import numpy as np

from gaussmax.core.covariance import CovarianceSpec, equicorrelated
from gaussmax.core.sampler import GaussianSampler, make_rng
from gaussmax.data.utils.exceptions import InvalidInput, NonPositiveInput, NonPositiveParameter
from gaussmax.utils.enum_class import DataGenerator
from gaussmax.utils.hash_utils import hash64

from .dataset import Dataset


def _check_shape(n, p):
    if n < 1 or p < 1:
        raise NonPositiveInput(f'n and p must be >= 1, got n={n}, p={p}')


def gaussian(n: int, spec: CovarianceSpec, seed: int) -> tuple[Dataset, np.ndarray]:
    _check_shape(n, spec.dim)
    z = GaussianSampler(spec, seed).sample(n)
    return Dataset.from_array(z), np.array(spec.entries)


def gram_matched(n: int, spec: CovarianceSpec) -> tuple[Dataset, np.ndarray]:
    """Deterministic dataset whose Gram matrix equals ``spec`` up to rounding, so ``delta_hat`` is ~0."""
    _check_shape(n, spec.dim)
    if n < spec.dim:
        raise InvalidInput(f'a Gram-matched dataset needs n >= p, got n={n}, p={spec.dim}')
    z = np.zeros((n, spec.dim))
    z[:spec.dim] = math.sqrt(n) * spec.factor.T
    return Dataset.from_array(z), np.array(spec.entries)


def case_a_subexponential(n: int, p: int, seed: int) -> tuple[Dataset, np.ndarray]:
    """Independent Laplace entries scaled to unit variance, so ``E exp(|Z_ij| / 2) <= 2``."""
    _check_shape(n, p)
    z = make_rng(seed).laplace(0.0, 1.0 / math.sqrt(2.0), size=(n, p))
    return Dataset.from_array(z), np.eye(p)


def regression_design(n: int, p: int, b_n: float, seed: int) -> np.ndarray:
    """Fixed design with unit mean-square columns and ``max |x_ij| <= b_n``.

    Each column has random signs and about ``n / (2 b_n^2)`` spikes of height
    ``b_n``; rescaling to unit mean square can only shrink the spikes.
    """
    if b_n < 1:
        raise NonPositiveParameter(f'b_n must be >= 1, got {b_n}')
    rng = make_rng(seed)
    magnitudes = np.ones((n, p))
    spikes = max(1, int(n / (2 * b_n * b_n)))
    if b_n > 1:
        for j in range(p):
            magnitudes[rng.choice(n, size=min(spikes, n), replace=False), j] = b_n
    x = rng.choice(np.array([-1.0, 1.0]), size=(n, p)) * magnitudes
    return x / np.sqrt(np.mean(x * x, axis=0))


def case_b_regression(n: int, p: int, b_n: float, q: float, seed: int,
                      design_seed: int | None = None) -> tuple[Dataset, np.ndarray]:
    """``Z_ij = eps_i x_ij`` with Student-t errors of ``4q + 1`` degrees of freedom.

    The design only depends on ``design_seed`` so repeated datasets share it;
    by default it is derived from ``(n, p, b_n)``.
    """
    _check_shape(n, p)
    if not q > 0.5:
        raise NonPositiveParameter(f'q must be > 1/2, got {q}')
    if design_seed is None:
        design_seed = hash64('design', n, p, b_n)
    x = regression_design(n, p, b_n, design_seed)
    df = 4 * q + 1
    eps = make_rng(seed).standard_t(df, size=n) * math.sqrt((df - 2) / df)
    reference = x.T @ x / n
    return Dataset.from_array(eps[:, None] * x), (reference + reference.T) / 2


def generate_dataset(generator, n: int, p: int, seed: int, rho: float = 0.0, b_n: float | None = None,
                     q: float = 2.0) -> tuple[Dataset, np.ndarray]:
    """Dispatch on ``DataGenerator``; ``b_n`` defaults to ``n^(1/8)`` for the regression design."""
    generator = DataGenerator(generator)
    if generator == DataGenerator.GAUSSIAN:
        return gaussian(n, equicorrelated(p, rho), seed)
    if generator == DataGenerator.CASE_A_SUBEXPONENTIAL:
        return case_a_subexponential(n, p, seed)
    if generator == DataGenerator.CASE_B_REGRESSION:
        return case_b_regression(n, p, max(1.0, n ** 0.125) if b_n is None else b_n, q, seed)
    raise InvalidInput(f'unknown generator {generator}')
