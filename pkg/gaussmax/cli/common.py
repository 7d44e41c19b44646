# Copyright (c) gauss-maxima developers. All rights reserved.
import os

from loguru import logger

from gaussmax.bootstrap import BootstrapRun, load_dataset, run_bootstrap
from gaussmax.core import load_covariance_csv
from gaussmax.data.data_reader_writer import DataWriter, DummyDataWriter, FileBasedDataReader, FileBasedDataWriter
from gaussmax.data.utils.exceptions import ConfigInvalid
from gaussmax.harness import ExperimentConfig, RunResult, load_result, persist_result, run_experiment
from gaussmax.harness.result import records_to_csv
from gaussmax.utils.enum_class import RunFile


def prepare_env(output_dir, experiment_id, overwrite=False):
    run_dir = str(os.path.join(output_dir, experiment_id))
    if os.path.exists(os.path.join(run_dir, RunFile.RESULT)) and not overwrite:
        raise ConfigInvalid(f"run '{experiment_id}' already exists in {output_dir}; pass --overwrite to replace it")
    os.makedirs(run_dir, exist_ok=True)
    return run_dir


def do_run(cfg: ExperimentConfig, output_dir=None, overwrite=False, writer: DataWriter | None = None) -> RunResult:
    """Run ``cfg``; without ``output_dir`` the run files go to ``writer``, in memory by default."""
    run_dir = prepare_env(output_dir, cfg.experiment_id, overwrite) if output_dir else None
    result = run_experiment(cfg)
    if run_dir is not None:
        persist_result(result, FileBasedDataWriter(run_dir), overwrite=True)
    else:
        persist_result(result, writer if writer is not None else DummyDataWriter())
    return result


def do_bootstrap(data_path, r, alphas, seed, reference_path=None, path='covariance', fmt='auto',
                 output_dir=None) -> BootstrapRun:
    ds = load_dataset(data_path, fmt=fmt)
    reference = load_covariance_csv(reference_path) if reference_path else None
    run = run_bootstrap(ds, r, seed, reference=reference, path=path)
    if output_dir:
        run.write(FileBasedDataWriter(output_dir), ds, alphas)
        logger.info(f'bootstrap replicates written to {output_dir}')
    return run


def do_report(run_dir) -> str:
    result = load_result(FileBasedDataReader(run_dir))
    return records_to_csv(result.records)
