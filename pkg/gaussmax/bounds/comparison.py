# Copyright (c) gauss-maxima developers. All rights reserved.
"""Gaussian comparison bounds and the Kolmogorov-distance bound for maxima.

Inputs are covariance gaps ``delta`` (max-entry distance between two
covariance matrices), smoothing levels ``beta`` and the sup-norms ``g1``/``g2``
of the first two derivatives of a test function.
"""
import math

from loguru import logger

from gaussmax.data.utils.exceptions import NegativeInput
from gaussmax.smoothmax.smoother import g0_norms
from gaussmax.utils.enum_class import FormulaId

from .anticoncentration import anticonc_explicit
from .report import (
    BoundReport,
    make_report,
    require_nonnegative,
    require_p,
    require_positive,
    require_sigmas,
)


def comparison_smooth(g1: float, g2: float, delta: float, beta: float) -> BoundReport:
    require_nonnegative(g1=g1, g2=g2, delta=delta)
    require_positive(NegativeInput, beta=beta)
    raw = (g2 / 2 + beta * g1) * delta
    return make_report(
        FormulaId.COMPARISON_SMOOTH,
        inputs={'g1': g1, 'g2': g2, 'delta': delta, 'beta': beta},
        constants={'half': 0.5},
        raw=raw,
    )


def comparison_max(g1: float, g2: float, delta: float, beta: float, p: float) -> BoundReport:
    require_nonnegative(g1=g1, g2=g2, delta=delta)
    require_positive(NegativeInput, beta=beta)
    require_p(p, 1)
    smoothing = (g2 / 2 + beta * g1) * delta
    slack = 2 / beta * g1 * math.log(p)
    return make_report(
        FormulaId.COMPARISON_MAX,
        inputs={'g1': g1, 'g2': g2, 'delta': delta, 'beta': beta, 'p': p},
        constants={'half': 0.5, 'slack_factor': 2.0},
        raw=smoothing + slack,
        intermediates={'smoothing_term': smoothing, 'slack_term': slack},
    )


def comparison_optimized(g1: float, g2: float, delta: float, p: float) -> BoundReport:
    """``comparison_max`` at its minimizing ``beta = sqrt(2 log p / delta)``."""
    require_nonnegative(g1=g1, g2=g2, delta=delta)
    require_p(p, 1)
    raw = g2 * delta / 2 + 2 * g1 * math.sqrt(2 * delta * math.log(p))
    intermediates = {}
    if delta > 0 and p > 1:
        intermediates['beta_star'] = math.sqrt(2 * math.log(p) / delta)
    return make_report(
        FormulaId.COMPARISON_OPTIMIZED,
        inputs={'g1': g1, 'g2': g2, 'delta': delta, 'p': p},
        constants={'half': 0.5, 'slack_factor': 2.0},
        raw=raw,
        intermediates=intermediates,
    )


def sudakov_fernique(delta: float, p: float) -> BoundReport:
    """Bound on ``|E max X - E max Y|``."""
    require_nonnegative(delta=delta)
    require_p(p, 2)
    return make_report(
        FormulaId.SUDAKOV_FERNIQUE,
        inputs={'delta': delta, 'p': p},
        constants={'factor': 2.0},
        raw=2 * math.sqrt(2 * delta * math.log(p)),
    )


def kolmogorov_shape(delta: float, p: float, c: float = 1.0) -> BoundReport:
    """``c * delta^(1/3) * max(1, log(p/delta))^(2/3)``, zero at ``delta = 0``."""
    require_nonnegative(delta=delta)
    require_p(p, 2)
    require_positive(NegativeInput, c=c)
    if delta == 0:
        raw = 0.0
    else:
        raw = c * delta ** (1 / 3) * max(1.0, math.log(p / delta)) ** (2 / 3)
    return make_report(
        FormulaId.KOLMOGOROV_SHAPE,
        inputs={'delta': delta, 'p': p},
        constants={'c': c},
        raw=raw,
        probability=True,
    )


def kolmogorov_explicit(delta: float, p: float, sigma_min: float, sigma_max: float,
                        a_p: float | None = None) -> BoundReport:
    """Kolmogorov bound with every constant spelled out.

    Smoothing is done with ``g_{x,beta,delta}`` at ``delta_s = delta^(1/3) (2 log p)^(1/6)``
    and ``beta = log p / delta_s``. The smoothing cost is
    ``(|g0''|/2 delta_s^-2 + |g0'| beta delta_s^-1) delta``. The window cost is
    the anti-concentration bound at ``eps = e_beta + delta_s`` with
    ``a_p <= sqrt(2 log p)`` unless ``a_p`` is given.
    """
    require_nonnegative(delta=delta)
    require_p(p, 2)
    require_sigmas(sigma_min, sigma_max)
    inputs = {'delta': delta, 'p': p, 'sigma_min': sigma_min, 'sigma_max': sigma_max}
    g1, g2 = g0_norms()
    constants = {'g0_sup_first': g1, 'g0_sup_second': g2}

    if delta == 0:
        return make_report(FormulaId.KOLMOGOROV_EXPLICIT, inputs, constants, 0.0, probability=True)
    if delta > 1:
        logger.warning(f'kolmogorov_explicit called with delta={delta} > 1, reporting the trivial bound 1')
        return make_report(
            FormulaId.KOLMOGOROV_EXPLICIT, inputs, constants, 1.0, probability=True,
            intermediates={'delta_out_of_range': 1.0}, capped=True,
        )

    log_p = math.log(p)
    if a_p is None:
        a_p = math.sqrt(2 * log_p)
    inputs['a_p'] = a_p

    smoothing_delta = delta ** (1 / 3) * (2 * log_p) ** (1 / 6)
    beta = log_p / smoothing_delta
    e_beta = log_p / beta
    second_order = g2 / 2 * smoothing_delta ** -2 * delta
    first_order = g1 * beta / smoothing_delta * delta
    smoothing_cost = second_order + first_order

    window = e_beta + smoothing_delta
    window_cost = anticonc_explicit(window, a_p, sigma_min, sigma_max).value

    # the upper and lower chains pay the window above and below x; the
    # anti-concentration bound is a sup over locations so both sides are equal
    one_sided = smoothing_cost + window_cost
    return make_report(
        FormulaId.KOLMOGOROV_EXPLICIT,
        inputs,
        constants,
        one_sided,
        probability=True,
        intermediates={
            'smoothing_delta': smoothing_delta,
            'beta': beta,
            'e_beta': e_beta,
            'second_order_term': second_order,
            'first_order_term': first_order,
            'smoothing_cost': smoothing_cost,
            'window_epsilon': window,
            'window_cost': window_cost,
            'one_sided': one_sided,
        },
    )
