# Copyright (c) gauss-maxima developers. All rights reserved.
import numpy as np

from gaussmax.data.utils.exceptions import NonPositiveInput
from gaussmax.utils.enum_class import GENERATOR_ID
from gaussmax.utils.hash_utils import U64_MASK

from .covariance import CovarianceSpec

# rows per chunk when only the maxima are kept
MAX_CHUNK_ROWS = 8192


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(int(seed) & U64_MASK))


class GaussianSampler:
    """Seeded stream of centered Gaussian vectors with covariance ``spec``.

    A sampler owns mutable generator state and must not be shared between
    threads; derive one sampler per task instead.
    """

    generator_id = GENERATOR_ID

    def __init__(self, spec: CovarianceSpec, seed: int):
        self.spec = spec
        self.seed = int(seed) & U64_MASK
        self._rng = make_rng(self.seed)

    def sample(self, n_draws: int) -> np.ndarray:
        if n_draws < 1:
            raise NonPositiveInput(f'n_draws must be >= 1, got {n_draws}')
        z = self._rng.standard_normal((n_draws, self.spec.dim))
        return z @ self.spec.factor.T

    def sample_max(self, n_draws: int, normalize: bool = False):
        """Draws of ``max_j X_j``, generated in chunks of ``MAX_CHUNK_ROWS`` rows.

        With ``normalize`` also returns the draws of ``max_j X_j / sigma_j``;
        coordinates with zero variance contribute 0 to that maximum.
        """
        if n_draws < 1:
            raise NonPositiveInput(f'n_draws must be >= 1, got {n_draws}')
        maxima = np.empty(n_draws)
        scaled = np.empty(n_draws) if normalize else None
        sigma = self.spec.sigma
        safe_sigma = np.where(sigma > 0, sigma, 1.0)
        for start in range(0, n_draws, MAX_CHUNK_ROWS):
            stop = min(start + MAX_CHUNK_ROWS, n_draws)
            x = self.sample(stop - start)
            maxima[start:stop] = x.max(axis=1)
            if normalize:
                scaled[start:stop] = (x / safe_sigma).max(axis=1)
        if normalize:
            return maxima, scaled
        return maxima


def sample(sampler: GaussianSampler, n_draws: int) -> np.ndarray:
    return sampler.sample(n_draws)
