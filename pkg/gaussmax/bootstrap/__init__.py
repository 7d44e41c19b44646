# Copyright (c) gauss-maxima developers. All rights reserved.
from .dataset import Dataset, delta_hat, load_dataset, normalized_sum, write_dataset
from .generators import (
    case_a_subexponential,
    case_b_regression,
    gaussian,
    generate_dataset,
    gram_matched,
    regression_design,
)
from .multiplier import (
    BootstrapRun,
    CmcltReport,
    bootstrap_quantile,
    cmclt_check,
    gaussian_analog_replicates,
    multiplier_replicates,
    run_bootstrap,
)

__all__ = [
    "BootstrapRun",
    "CmcltReport",
    "Dataset",
    "bootstrap_quantile",
    "case_a_subexponential",
    "case_b_regression",
    "cmclt_check",
    "delta_hat",
    "gaussian",
    "gaussian_analog_replicates",
    "generate_dataset",
    "gram_matched",
    "load_dataset",
    "multiplier_replicates",
    "normalized_sum",
    "regression_design",
    "run_bootstrap",
    "write_dataset",
]
