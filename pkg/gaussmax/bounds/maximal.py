# Copyright (c) gauss-maxima developers. All rights reserved.
"""Maximal inequalities for sums of independent vectors, with explicit constant ``c``."""
import math

from gaussmax.data.utils.exceptions import NegativeInput, NonPositiveInput
from gaussmax.utils.enum_class import FormulaId

from .report import BoundReport, make_report, require_nonnegative, require_p, require_positive


def maximal_inequality(sigma2: float, em2: float, p: float, c: float = 1.0) -> BoundReport:
    """``c (sigma sqrt(log p) + sqrt(E M^2) log p)`` for ``E max_j |sum_i (Z_ij - E Z_ij)|``.

    Args:
        sigma2: ``max_j sum_i E[Z_ij^2]``.
        em2: ``E[M^2]`` with ``M = max_{i,j} |Z_ij|``.
    """
    require_nonnegative(sigma2=sigma2, em2=em2)
    require_positive(NegativeInput, c=c)
    require_p(p, 2)
    log_p = math.log(p)
    variance_term = math.sqrt(sigma2) * math.sqrt(log_p)
    envelope_term = math.sqrt(em2) * log_p
    return make_report(
        FormulaId.MAXIMAL_INEQUALITY,
        inputs={'sigma2': sigma2, 'em2': em2, 'p': p},
        constants={'c': c},
        raw=c * (variance_term + envelope_term),
        intermediates={'variance_term': variance_term, 'envelope_term': envelope_term},
    )


def maximal_nonnegative(mean_sum_max: float, e_max: float, p: float, c: float = 1.0) -> BoundReport:
    """``c (max_j E sum_i V_ij + E[max_ij V_ij] log p)`` for ``E max_j sum_i V_ij``, ``V >= 0``."""
    require_nonnegative(mean_sum_max=mean_sum_max, e_max=e_max)
    require_positive(NegativeInput, c=c)
    require_p(p, 2)
    return make_report(
        FormulaId.MAXIMAL_NONNEGATIVE,
        inputs={'mean_sum_max': mean_sum_max, 'e_max': e_max, 'p': p},
        constants={'c': c},
        raw=c * (mean_sum_max + e_max * math.log(p)),
    )


def deltahat_bound(fourth_moment_avg: float, max_fourth: float, n: float, p: float, c: float = 1.0) -> BoundReport:
    """``c (A sqrt(log p / n) + B log p / n)`` for ``E[delta_hat]``.

    Args:
        fourth_moment_avg: ``A = max_j (n^-1 sum_i E[Z_ij^4])^(1/2)``.
        max_fourth: ``B = (E[max_ij Z_ij^4])^(1/2)``.
    """
    require_nonnegative(fourth_moment_avg=fourth_moment_avg, max_fourth=max_fourth)
    require_positive(NegativeInput, c=c)
    require_positive(NonPositiveInput, n=n)
    require_p(p, 2)
    log_p = math.log(p)
    return make_report(
        FormulaId.DELTAHAT_BOUND,
        inputs={'fourth_moment_avg': fourth_moment_avg, 'max_fourth': max_fourth, 'n': n, 'p': p},
        constants={'c': c},
        raw=c * (fourth_moment_avg * math.sqrt(log_p / n) + max_fourth * log_p / n),
    )


def case_b_rate(n: float, p: float, b_n: float, q: float) -> BoundReport:
    """Rate of the regression design: ``max{B^2 (log p)^5, B^(4q/(2q-1)) (log p)^(6q/(2q-1))} / n``.

    The multiplier bootstrap is consistent along a sequence where this tends to 0.
    """
    require_positive(NonPositiveInput, n=n)
    require_p(p, 2)
    if not b_n >= 1:
        raise NonPositiveInput(f'b_n must be >= 1, got {b_n}')
    if not q > 0.5:
        raise NonPositiveInput(f'q must be > 1/2, got {q}')
    log_p = math.log(p)
    exponent = 1 / (2 * q - 1)
    first = b_n ** 2 * log_p ** 5
    second = b_n ** (4 * q * exponent) * log_p ** (6 * q * exponent)
    return make_report(
        FormulaId.CASE_B_RATE,
        inputs={'n': n, 'p': p, 'b_n': b_n, 'q': q},
        constants={},
        raw=max(first, second) / n,
        intermediates={'first_term': first, 'second_term': second},
    )
