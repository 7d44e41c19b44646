# Copyright (c) gauss-maxima developers. All rights reserved.
from .calibrate import calibrate_all, calibrate_constant, calibrate_records
from .config import ExperimentConfig, load_config, parse_config
from .experiments import (
    run_anticonc_experiment,
    run_cmclt_experiment,
    run_comparison_experiment,
    run_experiment,
    run_gumbel_experiment,
    run_maximal_experiment,
    run_stein_check,
)
from .result import GridRecord, RunResult, Verdict, load_result, persist_result, records_to_csv
from .suite import SUITES, run_suite

__all__ = [
    "ExperimentConfig",
    "GridRecord",
    "RunResult",
    "SUITES",
    "Verdict",
    "calibrate_all",
    "calibrate_constant",
    "calibrate_records",
    "load_config",
    "load_result",
    "parse_config",
    "persist_result",
    "records_to_csv",
    "run_anticonc_experiment",
    "run_cmclt_experiment",
    "run_comparison_experiment",
    "run_experiment",
    "run_gumbel_experiment",
    "run_maximal_experiment",
    "run_stein_check",
    "run_suite",
]
