# Copyright (c) gauss-maxima developers. All rights reserved.
import math
from dataclasses import dataclass

import numpy as np
from loguru import logger

from gaussmax.core.covariance import max_covariance_gap
from gaussmax.data.data_reader_writer import DataReader, DataWriter, FileBasedDataReader, FileBasedDataWriter
from gaussmax.data.io import decode_gmax, encode_gmax, parse_matrix_csv, sniff_format
from gaussmax.data.utils.exceptions import EmptyData, InvalidInput, NonFiniteEntries
from gaussmax.utils.enum_class import DatasetFormat
from gaussmax.utils.hash_utils import bytes_sha256


@dataclass(frozen=True, eq=False)
class Dataset:
    """``n x p`` observations with the cached Gram matrix ``n^-1 sum_i Z_i Z_i^T``."""
    z: np.ndarray
    second_moments: np.ndarray
    fingerprint: str | None = None

    @classmethod
    def from_array(cls, z, fingerprint: str | None = None) -> 'Dataset':
        z = np.array(z, dtype=np.float64)
        if z.size == 0:
            raise EmptyData('dataset has no observations')
        if z.ndim != 2:
            raise InvalidInput(f'dataset must be an n x p matrix, got shape {z.shape}')
        if not np.all(np.isfinite(z)):
            raise NonFiniteEntries('dataset has NaN or infinite entries')
        gram = z.T @ z / z.shape[0]
        gram = (gram + gram.T) / 2
        z.setflags(write=False)
        gram.setflags(write=False)
        return cls(z=z, second_moments=gram, fingerprint=fingerprint)

    @property
    def n(self) -> int:
        return int(self.z.shape[0])

    @property
    def p(self) -> int:
        return int(self.z.shape[1])

    def fourth_moment_summary(self) -> tuple[float, float]:
        """Sample analogues of ``max_j (n^-1 sum_i Z_ij^4)^(1/2)`` and ``(max_ij Z_ij^4)^(1/2)``."""
        fourth = self.z ** 4
        return float(np.sqrt(fourth.mean(axis=0).max())), float(np.sqrt(fourth.max()))


def load_dataset(path, fmt=DatasetFormat.AUTO, reader: DataReader | None = None) -> Dataset:
    """Read a CSV (rows are observations, no header) or GMAX1 binary dataset.

    Raises:
        EmptyData: empty file or no rows.
        ParseError: malformed content, with the line number for CSV.
        NonFiniteEntries: NaN or infinite values.
    """
    reader = reader or FileBasedDataReader()
    data = reader.read(str(path))
    if len(data) == 0:
        raise EmptyData(f'{path} is empty')
    fmt = DatasetFormat(fmt)
    if fmt == DatasetFormat.AUTO:
        fmt = sniff_format(data)
    if fmt == DatasetFormat.BINARY:
        z = decode_gmax(data)
    else:
        z = parse_matrix_csv(data, what=f'dataset {path}')
    ds = Dataset.from_array(z, fingerprint=bytes_sha256(data))
    logger.info(f'loaded dataset {path}: n={ds.n}, p={ds.p} ({fmt.value})')
    return ds


def write_dataset(ds: Dataset, path, fmt=DatasetFormat.CSV, writer: DataWriter | None = None) -> None:
    writer = writer or FileBasedDataWriter()
    fmt = DatasetFormat(fmt)
    if fmt == DatasetFormat.BINARY:
        writer.write(str(path), encode_gmax(ds.z))
    else:
        writer.write_array_csv(str(path), ds.z)


def normalized_sum(ds: Dataset) -> np.ndarray:
    """``n^(-1/2) sum_i Z_i``."""
    return ds.z.sum(axis=0) / math.sqrt(ds.n)


def delta_hat(ds: Dataset, reference) -> float:
    """Max-entry gap between the Gram matrix and ``reference`` (a spec or a p x p array)."""
    return max_covariance_gap(ds.second_moments, reference)
