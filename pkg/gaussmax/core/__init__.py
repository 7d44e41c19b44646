from .covariance import (
    CovarianceSpec,
    build_covariance,
    diagonal,
    equicorrelated,
    load_covariance_csv,
    max_covariance_gap,
    moduli_augmented,
)
from .sampler import GaussianSampler, make_rng, sample

__all__ = [
    "CovarianceSpec",
    "GaussianSampler",
    "build_covariance",
    "diagonal",
    "equicorrelated",
    "load_covariance_csv",
    "make_rng",
    "max_covariance_gap",
    "moduli_augmented",
    "sample",
]
