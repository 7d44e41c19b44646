# Copyright (c) gauss-maxima developers. All rights reserved.
import math
from dataclasses import dataclass

import numpy as np

from gaussmax.data.data_reader_writer import DataReader, DataWriter
from gaussmax.data.io import parse_matrix_csv
from gaussmax.data.utils.exceptions import AlphaOutOfRange, EmptyInput, NonFiniteEntries, ParseError
from gaussmax.data.utils.schemas import SampleSidecar, SeedProvenance
from gaussmax.utils.enum_class import GENERATOR_ID


@dataclass(frozen=True, eq=False)
class SampleSet:
    """Sorted, read-only draws of a scalar statistic plus where they came from."""
    draws: np.ndarray
    provenance: SeedProvenance

    @classmethod
    def from_draws(cls, values, seed: int, experiment_id: str, generator: str = GENERATOR_ID) -> 'SampleSet':
        draws = np.sort(np.asarray(values, dtype=np.float64).ravel())
        if draws.size == 0:
            raise EmptyInput('a sample set needs at least one draw')
        if not np.all(np.isfinite(draws)):
            raise NonFiniteEntries('sample set draws must be finite')
        draws.setflags(write=False)
        provenance = SeedProvenance(seed=int(seed), generator=generator, experiment_id=experiment_id)
        return cls(draws=draws, provenance=provenance)

    @property
    def size(self) -> int:
        return int(self.draws.size)

    def mean(self) -> float:
        return float(self.draws.mean())

    def standard_error(self) -> float:
        if self.size < 2:
            return 0.0
        return float(self.draws.std(ddof=1) / math.sqrt(self.size))

    def ecdf(self, x):
        return np.searchsorted(self.draws, x, side='right') / self.size

    def quantile(self, level: float) -> float:
        """Lower order statistic of rank ``ceil(level * R)``."""
        if not 0 < level < 1:
            raise AlphaOutOfRange(f'quantile level must be in (0, 1), got {level}')
        # guard against ceil(0.95 * 2000) landing on 1901 through rounding
        rank = max(1, math.ceil(level * self.size - 1e-9))
        return float(self.draws[rank - 1])

    def sidecar(self) -> SampleSidecar:
        return SampleSidecar(**self.provenance.model_dump(), size=self.size)

    def write(self, writer: DataWriter, name: str) -> None:
        writer.write_array_csv(f'{name}.csv', self.draws)
        writer.write_json(f'{name}.json', self.sidecar().model_dump())

    @classmethod
    def read(cls, reader: DataReader, name: str) -> 'SampleSet':
        values = parse_matrix_csv(reader.read(f'{name}.csv'), what=f'sample {name}')
        if values.shape[1] != 1:
            raise ParseError(f'sample {name} must have a single column, got {values.shape[1]}')
        sidecar = SampleSidecar(**reader.read_json(f'{name}.json'))
        if sidecar.size != values.shape[0]:
            raise ParseError(f'sidecar of {name} declares {sidecar.size} draws, CSV has {values.shape[0]}')
        return cls.from_draws(values[:, 0], sidecar.seed, sidecar.experiment_id, sidecar.generator)
