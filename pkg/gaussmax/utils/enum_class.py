from enum import Enum


class FormulaId(str, Enum):
    COMPARISON_SMOOTH = 'comparison_smooth'
    COMPARISON_MAX = 'comparison_max'
    COMPARISON_OPTIMIZED = 'comparison_optimized'
    SUDAKOV_FERNIQUE = 'sudakov_fernique'
    KOLMOGOROV_SHAPE = 'kolmogorov_shape'
    KOLMOGOROV_EXPLICIT = 'kolmogorov_explicit'
    ANTICONC_EQUAL = 'anticonc_equal'
    ANTICONC_EXPLICIT = 'anticonc_explicit'
    ANTICONC_SIMPLE = 'anticonc_simple'
    ANTICONC_LOCATION = 'anticonc_location'
    ANTICONC_SINGLE = 'anticonc_single'
    BALL_BOUND = 'ball_bound'
    GAUSSIAN_TAIL = 'gaussian_tail'
    GAUSSIAN_CONCENTRATION = 'gaussian_concentration'
    MAXIMAL_INEQUALITY = 'maximal_inequality'
    MAXIMAL_NONNEGATIVE = 'maximal_nonnegative'
    DELTAHAT_BOUND = 'deltahat_bound'
    CASE_B_RATE = 'case_b_rate'


# formulas whose universal constant the harness is allowed to calibrate
CALIBRATABLE_FORMULAS = (
    FormulaId.KOLMOGOROV_SHAPE,
    FormulaId.ANTICONC_SIMPLE,
    FormulaId.MAXIMAL_INEQUALITY,
    FormulaId.DELTAHAT_BOUND,
)


class ExperimentKind(str, Enum):
    COMPARISON = 'comparison'
    ANTICONC = 'anticonc'
    CMCLT = 'cmclt'
    GUMBEL = 'gumbel'
    STEIN = 'stein'
    MAXIMAL = 'maximal'


DISTRIBUTIONAL_KINDS = (
    ExperimentKind.COMPARISON,
    ExperimentKind.ANTICONC,
    ExperimentKind.CMCLT,
    ExperimentKind.GUMBEL,
)


class DataGenerator(str, Enum):
    GAUSSIAN = 'gaussian'
    CASE_A_SUBEXPONENTIAL = 'case_a_subexponential'
    CASE_B_REGRESSION = 'case_b_regression'


class ReplicatePath(str, Enum):
    COVARIANCE = 'covariance'
    MULTIPLIER = 'multiplier'


class DatasetFormat(str, Enum):
    AUTO = 'auto'
    CSV = 'csv'
    BINARY = 'binary'


class VerdictKind:
    BOUND = 'bound'
    TREND = 'trend'
    COVERAGE = 'coverage'
    IDENTITY = 'identity'
    CALIBRATION = 'calibration'
    FLOOR = 'floor'


class RunFile:
    CONFIG = 'config.json'
    RESULT = 'result.json'
    TIMING = 'timing.json'
    RECORDS = 'records.csv'
    VIOLATIONS = 'violations.json'
    REPLICATES = 'replicates'
    GAUSSIAN_ANALOG = 'gaussian_analog'
    MANIFEST = 'manifest.json'


GENERATOR_ID = 'philox4x64'
GMAX_MAGIC = b'GMAX1'
