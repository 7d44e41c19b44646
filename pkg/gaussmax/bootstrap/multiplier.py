# Copyright (c) gauss-maxima developers. All rights reserved.
import math
from dataclasses import dataclass, field

import numpy as np
from loguru import logger

from gaussmax.bounds.comparison import kolmogorov_shape
from gaussmax.core.covariance import CovarianceSpec, build_covariance
from gaussmax.core.sampler import GaussianSampler, make_rng
from gaussmax.data.data_reader_writer import DataWriter
from gaussmax.data.utils.exceptions import AlphaOutOfRange, DimensionMismatch, InvalidInput, NonPositiveInput
from gaussmax.data.utils.schemas import BootstrapManifest
from gaussmax.maxlaw.distance import kolmogorov_distance, normal_scale_ks, two_sample_allowance
from gaussmax.maxlaw.sample_set import SampleSet
from gaussmax.utils.enum_class import ReplicatePath, RunFile
from gaussmax.utils.hash_utils import hash64

from .dataset import Dataset, delta_hat

# multiplier draws per chunk are capped at this many eta entries
ETA_CHUNK_ENTRIES = 1 << 22
MIN_CMCLT_REPLICATES = 1000


def _check_r(r):
    if r < 1:
        raise NonPositiveInput(f'number of replicates must be >= 1, got {r}')


def multiplier_replicates(ds: Dataset, r: int, seed: int, path=ReplicatePath.COVARIANCE,
                          experiment_id: str = 'bootstrap') -> SampleSet:
    """``r`` draws of ``max_j S^eta_{n,j}`` given the data.

    The covariance path samples ``N(0, n^-1 sum_i Z_i Z_i^T)`` through one
    factorization of the Gram matrix. The multiplier path draws a fresh
    Gaussian ``eta`` of length ``n`` for every replicate. Both realize the same
    conditional law.
    """
    _check_r(r)
    path = ReplicatePath(path)
    if path == ReplicatePath.COVARIANCE:
        maxima = GaussianSampler(build_covariance(ds.second_moments), seed).sample_max(r)
    else:
        rng = make_rng(seed)
        rows = max(1, ETA_CHUNK_ENTRIES // ds.n)
        maxima = np.empty(r)
        scale = 1.0 / math.sqrt(ds.n)
        for start in range(0, r, rows):
            stop = min(start + rows, r)
            eta = rng.standard_normal((stop - start, ds.n))
            maxima[start:stop] = (eta @ ds.z * scale).max(axis=1)
    return SampleSet.from_draws(maxima, seed=seed, experiment_id=experiment_id)


def gaussian_analog_replicates(cov: CovarianceSpec, r: int, seed: int,
                               experiment_id: str = 'bootstrap') -> SampleSet:
    """``r`` draws of ``max_j T_{n,j}`` with ``T_n ~ N(0, cov)``."""
    _check_r(r)
    return SampleSet.from_draws(GaussianSampler(cov, seed).sample_max(r), seed=seed, experiment_id=experiment_id)


@dataclass(slots=True)
class CmcltReport:
    n: int
    p: int
    r: int
    distance: float
    delta_hat: float
    prediction: float
    noise_allowance: float
    seeds: dict[str, int] = field(default_factory=dict)

    @property
    def within_prediction(self) -> bool:
        return self.distance <= self.prediction + self.noise_allowance

    def to_dict(self):
        return {
            'n': self.n,
            'p': self.p,
            'r': self.r,
            'distance': self.distance,
            'delta_hat': self.delta_hat,
            'prediction': self.prediction,
            'noise_allowance': self.noise_allowance,
            'within_prediction': self.within_prediction,
            'seeds': dict(self.seeds),
        }


def cmclt_check(ds: Dataset, true_cov: CovarianceSpec, r: int, seed: int, c: float = 1.0,
                path=ReplicatePath.COVARIANCE, experiment_id: str = 'cmclt') -> CmcltReport:
    """Distance between the bootstrap law of the max and its Gaussian analog.

    For ``p >= 2`` the prediction is ``kolmogorov_shape(delta_hat, p, c)``; for
    ``p = 1`` it is the exact distance between ``N(0, s_hat^2)`` and ``N(0, s^2)``.
    """
    if true_cov.dim != ds.p:
        raise DimensionMismatch(f'dataset has p={ds.p}, covariance has dim={true_cov.dim}')
    if r < MIN_CMCLT_REPLICATES:
        raise InvalidInput(f'cmclt_check needs r >= {MIN_CMCLT_REPLICATES}, got {r}')
    seeds = {'multiplier': hash64(seed, 'multiplier'), 'analog': hash64(seed, 'analog')}
    replicates = multiplier_replicates(ds, r, seeds['multiplier'], path, experiment_id)
    analog = gaussian_analog_replicates(true_cov, r, seeds['analog'], experiment_id)
    gap = delta_hat(ds, true_cov)
    if ds.p >= 2:
        prediction = kolmogorov_shape(gap, ds.p, c).value
    else:
        s_hat = math.sqrt(ds.second_moments[0, 0])
        s_true = math.sqrt(true_cov.entries[0, 0])
        prediction = normal_scale_ks(s_hat, s_true) if s_hat > 0 and s_true > 0 else 1.0
    report = CmcltReport(
        n=ds.n,
        p=ds.p,
        r=r,
        distance=kolmogorov_distance(replicates, analog),
        delta_hat=gap,
        prediction=prediction,
        noise_allowance=two_sample_allowance(r),
        seeds=seeds,
    )
    logger.debug(f'cmclt n={ds.n} p={ds.p}: distance={report.distance:.4f}, delta_hat={gap:.4f}')
    return report


@dataclass(slots=True)
class BootstrapRun:
    replicates: SampleSet
    gaussian_analog: SampleSet | None
    delta_hat: float | None
    seeds: dict[str, int]
    path: ReplicatePath = ReplicatePath.COVARIANCE

    def quantile(self, alpha: float) -> float:
        return bootstrap_quantile(self, alpha)

    def manifest(self, ds: Dataset, alphas=()) -> BootstrapManifest:
        return BootstrapManifest(
            n=ds.n,
            p=ds.p,
            r=self.replicates.size,
            path=self.path.value,
            delta_hat=self.delta_hat,
            seeds=dict(self.seeds),
            quantiles={f'{alpha:g}': self.quantile(alpha) for alpha in alphas},
            dataset_sha256=ds.fingerprint,
        )

    def write(self, writer: DataWriter, ds: Dataset, alphas=()) -> None:
        self.replicates.write(writer, RunFile.REPLICATES)
        if self.gaussian_analog is not None:
            self.gaussian_analog.write(writer, RunFile.GAUSSIAN_ANALOG)
        writer.write_json(RunFile.MANIFEST, self.manifest(ds, alphas).model_dump())


def bootstrap_quantile(run: 'BootstrapRun | SampleSet', alpha: float) -> float:
    """``(1 - alpha)`` quantile: the order statistic of rank ``ceil((1 - alpha) R)``."""
    if not 0 < alpha < 1:
        raise AlphaOutOfRange(f'alpha must be in (0, 1), got {alpha}')
    samples = run.replicates if isinstance(run, BootstrapRun) else run
    rank = math.ceil((1 - alpha) * samples.size - 1e-9)
    rank = min(max(rank, 1), samples.size)
    return float(samples.draws[rank - 1])


def run_bootstrap(ds: Dataset, r: int, seed: int, reference: CovarianceSpec | None = None,
                  path=ReplicatePath.COVARIANCE, experiment_id: str = 'bootstrap') -> BootstrapRun:
    """Multiplier replicates, plus the Gaussian analog and ``delta_hat`` when a reference is known."""
    seeds = {'multiplier': hash64(seed, 'multiplier')}
    replicates = multiplier_replicates(ds, r, seeds['multiplier'], path, experiment_id)
    analog = None
    gap = None
    if reference is not None:
        if reference.dim != ds.p:
            raise DimensionMismatch(f'dataset has p={ds.p}, reference has dim={reference.dim}')
        seeds['analog'] = hash64(seed, 'analog')
        analog = gaussian_analog_replicates(reference, r, seeds['analog'], experiment_id)
        gap = delta_hat(ds, reference)
    return BootstrapRun(replicates=replicates, gaussian_analog=analog, delta_hat=gap, seeds=seeds,
                        path=ReplicatePath(path))
