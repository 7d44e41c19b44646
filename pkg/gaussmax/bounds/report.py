# Copyright (c) gauss-maxima developers. All rights reserved.
from dataclasses import dataclass, field

from loguru import logger

from gaussmax.data.utils.exceptions import (
    NegativeInput,
    NonPositiveInput,
    NonPositiveSigma,
    POutOfRange,
)
from gaussmax.utils.enum_class import FormulaId


@dataclass(slots=True)
class BoundReport:
    formula_id: FormulaId
    inputs: dict[str, float]
    constants: dict[str, float]
    value: float
    raw_value: float
    probability: bool = False
    capped: bool = False
    intermediates: dict[str, float] = field(default_factory=dict)

    def to_dict(self):
        return {
            'formula_id': self.formula_id.value,
            'inputs': dict(self.inputs),
            'constants': dict(self.constants),
            'value': self.value,
            'raw_value': self.raw_value,
            'probability': self.probability,
            'capped': self.capped,
            'intermediates': dict(self.intermediates),
        }


def make_report(formula_id, inputs, constants, raw, probability=False, intermediates=None,
                capped=False) -> BoundReport:
    """``capped=True`` marks a probability report that was replaced by the trivial bound 1."""
    raw = float(raw)
    capped = probability and (capped or raw > 1.0)
    if capped:
        logger.debug(f'{FormulaId(formula_id).value} capped at 1 (raw value {raw:.4g})')
    return BoundReport(
        formula_id=FormulaId(formula_id),
        inputs={k: float(v) for k, v in inputs.items()},
        constants={k: float(v) for k, v in constants.items()},
        value=min(raw, 1.0) if probability else raw,
        raw_value=raw,
        probability=probability,
        capped=capped,
        intermediates={k: float(v) for k, v in (intermediates or {}).items()},
    )


def require_nonnegative(**values):
    for name, value in values.items():
        if not value >= 0:
            raise NegativeInput(f'{name} must be >= 0, got {value}')


def require_positive(exc=NonPositiveInput, **values):
    for name, value in values.items():
        if not value > 0:
            raise exc(f'{name} must be > 0, got {value}')


def require_p(p, minimum):
    if not p >= minimum:
        raise POutOfRange(f'p must be >= {minimum}, got {p}')


def require_sigmas(sigma_min, sigma_max):
    if not sigma_min > 0:
        raise NonPositiveSigma(f'sigma_min must be > 0, got {sigma_min}')
    if not sigma_max >= sigma_min:
        raise NonPositiveSigma(f'sigma_max={sigma_max} is below sigma_min={sigma_min}')
