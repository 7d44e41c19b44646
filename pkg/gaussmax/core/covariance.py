# Copyright (c) gauss-maxima developers. All rights reserved.
from dataclasses import dataclass

import numpy as np
from loguru import logger

from gaussmax.data.data_reader_writer import DataReader, FileBasedDataReader
from gaussmax.data.io import parse_matrix_csv
from gaussmax.data.utils.exceptions import (
    DimensionMismatch,
    NonFiniteEntries,
    NonSquareMatrix,
    NotPSD,
    POutOfRange,
    RhoOutOfRange,
)

# pivots in [-PIVOT_TOL * max diag, PIVOT_TOL * max diag] are treated as zero
PIVOT_TOL = 1e-10
RECONSTRUCTION_TOL = 1e-8


@dataclass(frozen=True, eq=False)
class CovarianceSpec:
    """Symmetric PSD covariance matrix with a cached lower-triangular factor.

    ``entries`` and ``factor`` are read-only arrays, so a spec can be shared
    between threads.
    """
    entries: np.ndarray
    factor: np.ndarray

    @property
    def dim(self) -> int:
        return int(self.entries.shape[0])

    @property
    def variances(self) -> np.ndarray:
        return np.diag(self.entries).copy()

    @property
    def sigma(self) -> np.ndarray:
        return np.sqrt(np.clip(np.diag(self.entries), 0.0, None))

    @property
    def sigma_min(self) -> float:
        return float(self.sigma.min())

    @property
    def sigma_max(self) -> float:
        return float(self.sigma.max())

    @property
    def equal_variance(self) -> bool:
        return self.sigma_min == self.sigma_max

    def to_dict(self):
        return {'dim': self.dim, 'entries': self.entries.tolist()}


def _freeze(entries: np.ndarray, factor: np.ndarray) -> CovarianceSpec:
    entries = np.array(entries, dtype=np.float64)
    factor = np.array(factor, dtype=np.float64)
    entries.setflags(write=False)
    factor.setflags(write=False)
    return CovarianceSpec(entries=entries, factor=factor)


def _clamped_cholesky(sym: np.ndarray, tol: float) -> np.ndarray:
    p = sym.shape[0]
    factor = np.zeros_like(sym)
    clamped = 0
    for j in range(p):
        col = sym[j:, j] - factor[j:, :j] @ factor[j, :j]
        pivot = col[0]
        if pivot < -tol:
            raise NotPSD(f'pivot {pivot:.6e} at index {j} is below -{tol:.3e}')
        if pivot <= tol:
            clamped += 1
            continue
        d = np.sqrt(pivot)
        factor[j, j] = d
        factor[j + 1:, j] = col[1:] / d
    if clamped:
        logger.debug(f'clamped {clamped} near-zero pivot(s) of a {p}x{p} covariance')
    return factor


def factorize(sym: np.ndarray) -> np.ndarray:
    """Lower-triangular ``L`` with ``L @ L.T == sym`` up to the reconstruction tolerance.

    LAPACK Cholesky is tried first; rank-deficient matrices fall back to a
    column-by-column factorization that clamps near-zero pivots to 0.
    """
    max_diag = max(float(np.max(np.diag(sym))), 0.0)
    tol = PIVOT_TOL * max_diag
    try:
        factor = np.linalg.cholesky(sym)
    except np.linalg.LinAlgError:
        factor = _clamped_cholesky(sym, tol)

    scale = float(np.max(np.abs(sym)))
    err = float(np.max(np.abs(factor @ factor.T - sym)))
    if err > RECONSTRUCTION_TOL * scale:
        raise NotPSD(f'factor reconstruction error {err:.3e} exceeds {RECONSTRUCTION_TOL:g} * {scale:.3e}')
    return factor


def build_covariance(entries) -> CovarianceSpec:
    """Validate a covariance matrix and cache its factor.

    The input is symmetrized as ``(A + A.T) / 2`` first.

    Raises:
        NonSquareMatrix: not a non-empty square 2-D array.
        NonFiniteEntries: NaN or infinite entries.
        NotPSD: a pivot below ``-1e-10 * max diag`` or a bad reconstruction.
    """
    a = np.asarray(entries, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] == 0:
        raise NonSquareMatrix(f'expected a non-empty p x p matrix, got shape {a.shape}')
    if not np.all(np.isfinite(a)):
        raise NonFiniteEntries('covariance has NaN or infinite entries')
    sym = (a + a.T) / 2
    return _freeze(sym, factorize(sym))


def equicorrelated(p: int, rho: float) -> CovarianceSpec:
    if p < 1:
        raise POutOfRange(f'p must be >= 1, got {p}')
    lower = -1.0 / (p - 1) if p > 1 else -1.0
    if not (lower - 1e-12 <= rho <= 1.0):
        raise RhoOutOfRange(f'rho={rho} outside the PSD range [{lower:.6g}, 1] for p={p}')
    entries = np.full((p, p), float(rho))
    np.fill_diagonal(entries, 1.0)
    return build_covariance(entries)


def diagonal(sigmas) -> CovarianceSpec:
    """Independent coordinates with standard deviations ``sigmas``."""
    sigmas = np.asarray(sigmas, dtype=np.float64).ravel()
    return build_covariance(np.diag(sigmas ** 2))


def moduli_augmented(spec: CovarianceSpec) -> CovarianceSpec:
    """Covariance of ``(X, -X)``; its maximum is ``max_j |X_j|``."""
    s, f = spec.entries, spec.factor
    entries = np.block([[s, -s], [-s, s]])
    zeros = np.zeros_like(f)
    factor = np.block([[f, zeros], [-f, zeros]])
    return _freeze(entries, factor)


def _as_matrix(m) -> np.ndarray:
    if isinstance(m, CovarianceSpec):
        return m.entries
    return np.atleast_2d(np.asarray(m, dtype=np.float64))


def max_covariance_gap(a, b) -> float:
    """Max-entry distance between two covariance matrices (specs or arrays)."""
    ma, mb = _as_matrix(a), _as_matrix(b)
    if ma.shape != mb.shape:
        raise DimensionMismatch(f'shapes {ma.shape} and {mb.shape} differ')
    return float(np.max(np.abs(ma - mb)))


def load_covariance_csv(path, reader: DataReader | None = None) -> CovarianceSpec:
    reader = reader or FileBasedDataReader()
    entries = parse_matrix_csv(reader.read(str(path)), what=f'covariance {path}')
    logger.info(f'loaded {entries.shape[0]}x{entries.shape[1]} covariance from {path}')
    return build_covariance(entries)
