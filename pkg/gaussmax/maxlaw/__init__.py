from .density import (
    MonotonicityReport,
    conditional_below_probability,
    max_density_bivariate,
    max_density_histogram,
    max_density_mc,
    monotone_density_factor_check,
)
from .distance import (
    dkw_allowance,
    kolmogorov_distance,
    levy_concentration,
    normal_scale_ks,
    two_sample_allowance,
)
from .gumbel import (
    GumbelCalibration,
    calibrated_max_cdf,
    gumbel_approx_density,
    gumbel_calibration,
    gumbel_cdf,
    gumbel_cdf_gap,
    gumbel_density,
)
from .iid import iid_max_cdf, iid_max_draws, iid_max_pdf, iid_max_quantile_draws
from .normal import log_norm_cdf, norm_cdf, norm_pdf
from .sample_set import SampleSet

__all__ = [
    "GumbelCalibration",
    "MonotonicityReport",
    "SampleSet",
    "calibrated_max_cdf",
    "conditional_below_probability",
    "dkw_allowance",
    "gumbel_approx_density",
    "gumbel_calibration",
    "gumbel_cdf",
    "gumbel_cdf_gap",
    "gumbel_density",
    "iid_max_cdf",
    "iid_max_draws",
    "iid_max_pdf",
    "iid_max_quantile_draws",
    "kolmogorov_distance",
    "levy_concentration",
    "log_norm_cdf",
    "max_density_bivariate",
    "max_density_histogram",
    "max_density_mc",
    "monotone_density_factor_check",
    "norm_cdf",
    "norm_pdf",
    "normal_scale_ks",
    "two_sample_allowance",
]
