# Copyright (c) gauss-maxima developers. All rights reserved.

from pydantic import BaseModel, Field


class SeedProvenance(BaseModel):
    """Where a set of draws came from
    """
    seed: int = Field(description='64-bit seed of the generating stream', ge=0)
    generator: str = Field(description='name of the bit generator', min_length=1)
    experiment_id: str = Field(description='experiment or command that produced the draws', min_length=1)


class SampleSidecar(SeedProvenance):
    """JSON sidecar stored next to a single-column sample CSV
    """
    size: int = Field(description='number of draws R', ge=1)


class BootstrapManifest(BaseModel):
    """Summary persisted next to the replicate CSVs of a bootstrap run
    """
    n: int = Field(description='sample size', ge=1)
    p: int = Field(description='dimension', ge=1)
    r: int = Field(description='number of bootstrap replicates', ge=1)
    path: str = Field(description='replicate path, covariance or multiplier')
    delta_hat: float | None = Field(description='max-entry gap to the reference second moments', default=None)
    seeds: dict[str, int] = Field(description='seed of every stream used by the run')
    quantiles: dict[str, float] = Field(description='bootstrap quantiles keyed by alpha', default_factory=dict)
    dataset_sha256: str | None = Field(description='fingerprint of the input file', default=None)
