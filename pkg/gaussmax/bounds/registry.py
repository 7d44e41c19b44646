# Copyright (c) gauss-maxima developers. All rights reserved.
import inspect

from gaussmax.data.utils.exceptions import InvalidInput
from gaussmax.utils.enum_class import FormulaId

from .anticoncentration import (
    anticonc_equal,
    anticonc_explicit,
    anticonc_location,
    anticonc_simple,
    anticonc_single,
    ball_bound,
    gaussian_concentration,
    gaussian_tail_report,
)
from .comparison import (
    comparison_max,
    comparison_optimized,
    comparison_smooth,
    kolmogorov_explicit,
    kolmogorov_shape,
    sudakov_fernique,
)
from .maximal import case_b_rate, deltahat_bound, maximal_inequality, maximal_nonnegative
from .report import BoundReport

FORMULA_REGISTRY = {
    FormulaId.COMPARISON_SMOOTH: comparison_smooth,
    FormulaId.COMPARISON_MAX: comparison_max,
    FormulaId.COMPARISON_OPTIMIZED: comparison_optimized,
    FormulaId.SUDAKOV_FERNIQUE: sudakov_fernique,
    FormulaId.KOLMOGOROV_SHAPE: kolmogorov_shape,
    FormulaId.KOLMOGOROV_EXPLICIT: kolmogorov_explicit,
    FormulaId.ANTICONC_EQUAL: anticonc_equal,
    FormulaId.ANTICONC_EXPLICIT: anticonc_explicit,
    FormulaId.ANTICONC_SIMPLE: anticonc_simple,
    FormulaId.ANTICONC_LOCATION: anticonc_location,
    FormulaId.ANTICONC_SINGLE: anticonc_single,
    FormulaId.BALL_BOUND: ball_bound,
    FormulaId.GAUSSIAN_TAIL: gaussian_tail_report,
    FormulaId.GAUSSIAN_CONCENTRATION: gaussian_concentration,
    FormulaId.MAXIMAL_INEQUALITY: maximal_inequality,
    FormulaId.MAXIMAL_NONNEGATIVE: maximal_nonnegative,
    FormulaId.DELTAHAT_BOUND: deltahat_bound,
    FormulaId.CASE_B_RATE: case_b_rate,
}


def formula_parameters(formula_id) -> dict[str, inspect.Parameter]:
    return dict(inspect.signature(FORMULA_REGISTRY[FormulaId(formula_id)]).parameters)


def _coerce(name: str, value, parameter: inspect.Parameter):
    if parameter.annotation is bool or isinstance(parameter.default, bool):
        if isinstance(value, bool):
            return value
        if isinstance(value, (int, float)) and value in (0, 1):
            return bool(value)
        text = str(value).strip().lower()
        if text in ('true', '1', 'yes'):
            return True
        if text in ('false', '0', 'no'):
            return False
        raise InvalidInput(f'{name} expects a boolean, got {value!r}')
    try:
        return float(value)
    except (TypeError, ValueError):
        raise InvalidInput(f'{name} expects a number, got {value!r}')


def evaluate(formula_id, inputs: dict) -> BoundReport:
    """Evaluate a bound by its stable id from loosely typed ``inputs``.

    Raises:
        InvalidInput: unknown formula id, unknown or missing inputs, or values
            that are not numbers.
    """
    try:
        formula_id = FormulaId(formula_id)
    except ValueError:
        known = ', '.join(f.value for f in FormulaId)
        raise InvalidInput(f'unknown formula id {formula_id!r}; known ids: {known}')

    parameters = formula_parameters(formula_id)
    unknown = sorted(set(inputs) - set(parameters))
    if unknown:
        raise InvalidInput(f'{formula_id.value} does not take {unknown}; inputs are {list(parameters)}')
    missing = [name for name, parameter in parameters.items()
               if parameter.default is inspect.Parameter.empty and name not in inputs]
    if missing:
        raise InvalidInput(f'{formula_id.value} is missing inputs {missing}')

    kwargs = {name: _coerce(name, value, parameters[name]) for name, value in inputs.items()}
    return FORMULA_REGISTRY[formula_id](**kwargs)


def evaluate_with_constant(formula_id, inputs: dict, c: float) -> BoundReport:
    return evaluate(formula_id, {**inputs, 'c': c})
