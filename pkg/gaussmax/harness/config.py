# Copyright (c) gauss-maxima developers. All rights reserved.
import json
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, SerializeAsAny, ValidationError, model_validator

from gaussmax.data.data_reader_writer import DataReader, FileBasedDataReader
from gaussmax.data.utils.exceptions import ConfigInvalid
from gaussmax.utils.config_reader import get_block_size, get_master_seed, get_workers
from gaussmax.utils.enum_class import DISTRIBUTIONAL_KINDS, DataGenerator, ExperimentKind, ReplicatePath

MIN_DISTRIBUTIONAL_R = 1000


class ExperimentParameters(BaseModel):
    model_config = ConfigDict(extra='forbid')


class CovarianceChoice(BaseModel):
    """One covariance of the anti-concentration grid."""
    model_config = ConfigDict(extra='forbid')

    structure: Literal['iid', 'equicorrelated', 'diagonal'] = 'iid'
    p: int = Field(default=100, ge=1)
    rho: float = Field(default=0.0, ge=-1.0, le=1.0)
    sigma_min: float = Field(default=1.0, gt=0)
    sigma_max: float = Field(default=1.0, gt=0)
    absolute: bool = Field(default=False, description='evaluate max_j |X_j| through the (X, -X) augmentation')

    @model_validator(mode='after')
    def _check_sigmas(self):
        if self.sigma_min > self.sigma_max:
            raise ValueError(f'sigma_min={self.sigma_min} exceeds sigma_max={self.sigma_max}')
        return self


class ComparisonParams(ExperimentParameters):
    p: int = Field(default=100, ge=2)
    r: int = Field(default=100_000, ge=1)
    delta_grid: list[float] = Field(default_factory=lambda: [1e-1, 1e-2, 1e-3, 1e-4], min_length=1)
    rho: float = Field(default=0.5, ge=0.0, lt=1.0, description='correlation of Y; X uses rho + delta')

    @model_validator(mode='after')
    def _check_grid(self):
        for delta in self.delta_grid:
            if delta < 0 or self.rho + delta > 1:
                raise ValueError(f'delta={delta} must be >= 0 with rho + delta <= 1')
        return self


class AnticoncParams(ExperimentParameters):
    r: int = Field(default=100_000, ge=1)
    eps_grid: list[float] = Field(default_factory=lambda: [1e-3, 1e-2, 1e-1], min_length=1)
    covariances: list[CovarianceChoice] = Field(default_factory=lambda: [CovarianceChoice()], min_length=1)
    tightness_floor: float = Field(default=0.1, ge=0)

    @model_validator(mode='after')
    def _check_eps(self):
        if any(eps <= 0 for eps in self.eps_grid):
            raise ValueError('eps_grid entries must be > 0')
        return self


class CmcltParams(ExperimentParameters):
    generator: DataGenerator = DataGenerator.GAUSSIAN
    n_grid: list[int] = Field(default_factory=lambda: [500], min_length=1)
    p: int | None = Field(default=200, ge=1, description='None means p = ceil(exp(n^(1/6))) per n')
    r: int = Field(default=2000, ge=1)
    datasets_per_n: int = Field(default=1, ge=1)
    rho: float = Field(default=0.0, ge=0.0, lt=1.0)
    b_n: float | None = Field(default=None, ge=1.0)
    q: float = Field(default=2.0, gt=0.5)
    path: ReplicatePath = ReplicatePath.COVARIANCE
    zero_delta: bool = Field(default=False, description='use datasets whose Gram matrix equals the covariance')
    max_distance: float | None = Field(default=None, ge=0)
    coverage_reps: int = Field(default=0, ge=0)
    alpha: float = Field(default=0.05, gt=0, lt=1)
    coverage_tolerance: float = Field(default=0.02, ge=0)

    @model_validator(mode='after')
    def _check_n(self):
        if any(n < 1 for n in self.n_grid):
            raise ValueError('n_grid entries must be >= 1')
        return self


class SteinParams(ExperimentParameters):
    p: int = Field(default=3, ge=1)
    r: int = Field(default=1_000_000, ge=2)
    beta: float = Field(default=2.0, gt=0)
    functions: list[Literal['identity', 'smooth_max', 'g0_smooth_max', 'g0_smooth_max_gradient']] = Field(
        default_factory=lambda: ['identity', 'smooth_max', 'g0_smooth_max', 'g0_smooth_max_gradient'], min_length=1)
    x: float = 0.0
    delta: float = Field(default=1.0, gt=0)
    se_multiple: float = Field(default=5.0, gt=0)


class GumbelParams(ExperimentParameters):
    p_grid: list[float] = Field(default_factory=lambda: [1e2, 1e4, 1e6], min_length=1)
    r: int = Field(default=100_000, ge=1)
    density_tolerance: float = Field(default=0.025, ge=0)
    density_gate_min_p: float = Field(default=1e6, ge=3)

    @model_validator(mode='after')
    def _check_p(self):
        if any(p < 3 for p in self.p_grid):
            raise ValueError('p_grid entries must be >= 3')
        return self


class MaximalParams(ExperimentParameters):
    n: int = Field(default=200, ge=1)
    p: int = Field(default=50, ge=2)
    r: int = Field(default=2000, ge=2)
    calibration_ceiling: float = Field(default=8.0, gt=0)


PARAMETERS_BY_KIND = {
    ExperimentKind.COMPARISON: ComparisonParams,
    ExperimentKind.ANTICONC: AnticoncParams,
    ExperimentKind.CMCLT: CmcltParams,
    ExperimentKind.STEIN: SteinParams,
    ExperimentKind.GUMBEL: GumbelParams,
    ExperimentKind.MAXIMAL: MaximalParams,
}


class ExperimentConfig(BaseModel):
    model_config = ConfigDict(extra='forbid')

    experiment_id: str = Field(min_length=1, pattern=r'^[A-Za-z0-9_.\-]+$')
    kind: ExperimentKind
    parameters: SerializeAsAny[ExperimentParameters] = Field(default_factory=ExperimentParameters)
    parallelism: int = Field(default=1, ge=1)
    master_seed: int = Field(default=20130901, ge=0, lt=1 << 64)
    block_size: int = Field(default=10_000, ge=1)

    @model_validator(mode='before')
    @classmethod
    def _typed_parameters(cls, data):
        if isinstance(data, dict) and 'kind' in data:
            try:
                kind = ExperimentKind(data['kind'])
            except ValueError:
                return data
            parameters = data.get('parameters') or {}
            if not isinstance(parameters, PARAMETERS_BY_KIND[kind]):
                if isinstance(parameters, BaseModel):
                    parameters = parameters.model_dump()
                data = {**data, 'parameters': PARAMETERS_BY_KIND[kind].model_validate(parameters)}
        return data

    @model_validator(mode='after')
    def _check_replicates(self):
        if not isinstance(self.parameters, PARAMETERS_BY_KIND[self.kind]):
            raise ValueError(f'parameters do not match kind {self.kind.value}')
        if self.kind in DISTRIBUTIONAL_KINDS and self.parameters.r < MIN_DISTRIBUTIONAL_R:
            raise ValueError(f'{self.kind.value} experiments need r >= {MIN_DISTRIBUTIONAL_R}, got {self.parameters.r}')
        return self


def _config_error(exc: ValidationError) -> ConfigInvalid:
    details = '; '.join(f"{'.'.join(str(part) for part in err['loc']) or 'config'}: {err['msg']}"
                        for err in exc.errors())
    return ConfigInvalid(details)


def parse_config(document: dict) -> ExperimentConfig:
    """Validate a config document, applying the environment overrides.

    Raises:
        ConfigInvalid: any field fails validation.
    """
    if not isinstance(document, dict):
        raise ConfigInvalid('config must be a JSON object')
    document = dict(document)
    document.setdefault('block_size', get_block_size())
    try:
        cfg = ExperimentConfig.model_validate(document)
    except ValidationError as e:
        raise _config_error(e)
    return cfg.model_copy(update={
        'master_seed': get_master_seed(cfg.master_seed if 'master_seed' in document else None),
        'parallelism': max(1, get_workers(cfg.parallelism if 'parallelism' in document else None)),
    })


def load_config(path, reader: DataReader | None = None) -> ExperimentConfig:
    reader = reader or FileBasedDataReader()
    try:
        document = json.loads(reader.read(str(path)).decode('utf-8'))
    except (json.JSONDecodeError, UnicodeDecodeError) as e:
        raise ConfigInvalid(f'{path} is not valid JSON: {e}')
    return parse_config(document)
