# Copyright (c) gauss-maxima developers. All rights reserved.
import numpy as np
from loguru import logger

from gaussmax.bounds.registry import evaluate_with_constant
from gaussmax.data.utils.exceptions import InvalidInput, NoDominatingConstant
from gaussmax.utils.config_reader import get_calibration_grid
from gaussmax.utils.enum_class import CALIBRATABLE_FORMULAS, FormulaId

from .result import GridRecord, RunResult


def calibration_grid() -> np.ndarray:
    lo, hi, points = get_calibration_grid()
    return np.logspace(lo, hi, points)


def calibrate_records(records: list[GridRecord], formula_id) -> float:
    """Smallest grid ``c`` with ``bound(c) + allowance >= empirical`` on every record of ``formula_id``.

    Raises:
        InvalidInput: the formula has no abstract constant, or no record carries it.
        NoDominatingConstant: even the largest grid constant is exceeded.
    """
    formula_id = FormulaId(formula_id)
    if formula_id not in CALIBRATABLE_FORMULAS:
        raise InvalidInput(f'{formula_id.value} has no constant to calibrate')
    relevant = [r for r in records if r.formula_id == formula_id.value and r.calibration is not None]
    if not relevant:
        raise InvalidInput(f'no record carries calibration inputs for {formula_id.value}')
    for c in calibration_grid():
        c = float(c)
        if all(evaluate_with_constant(formula_id, r.calibration, c).value + r.allowance >= r.empirical
               for r in relevant):
            logger.debug(f'{formula_id.value}: calibrated c={c:.6g} over {len(relevant)} records')
            return c
    worst = max(relevant, key=lambda r: r.empirical - r.allowance)
    raise NoDominatingConstant(
        f'{formula_id.value}: no grid constant dominates grid point {worst.grid_index} ({worst.label})')


def calibrate_constant(cfg_or_result, formula_id) -> float:
    """Calibrate ``formula_id`` against a finished run, or run the experiment first.

    The constant is also written into ``RunResult.calibrated_constants``.
    """
    if isinstance(cfg_or_result, RunResult):
        result = cfg_or_result
    else:
        from .experiments import run_experiment
        result = run_experiment(cfg_or_result)
    c = calibrate_records(result.records, formula_id)
    result.calibrated_constants[FormulaId(formula_id).value] = c
    return c


def calibrate_all(result: RunResult) -> dict[str, float | None]:
    """Calibrate every formula the run has records for; a failure is kept as ``None``."""
    constants = {}
    present = {r.formula_id for r in result.records if r.calibration is not None}
    for formula_id in CALIBRATABLE_FORMULAS:
        if formula_id.value not in present:
            continue
        try:
            constants[formula_id.value] = calibrate_records(result.records, formula_id)
        except NoDominatingConstant as e:
            logger.warning(str(e))
            constants[formula_id.value] = None
    return constants
