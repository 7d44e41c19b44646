# Copyright (c) gauss-maxima developers. All rights reserved.
"""Upper bounds on the Levy concentration ``sup_x P(|max_j X_j - x| <= eps)``."""
import math

from gaussmax.data.utils.exceptions import NegativeInput, NonPositiveEpsilon, NonPositiveInput, NonPositiveSigma
from gaussmax.utils.enum_class import FormulaId

from .report import (
    BoundReport,
    make_report,
    require_nonnegative,
    require_p,
    require_positive,
    require_sigmas,
)


def anticonc_equal(epsilon: float, a_p: float, sigma: float) -> BoundReport:
    """Equal variances ``sigma^2``: ``4 eps (a_p + 1) / sigma``."""
    require_positive(NonPositiveSigma, sigma=sigma)
    require_positive(NonPositiveEpsilon, epsilon=epsilon)
    require_nonnegative(a_p=a_p)
    return make_report(
        FormulaId.ANTICONC_EQUAL,
        inputs={'epsilon': epsilon, 'a_p': a_p, 'sigma': sigma},
        constants={'factor': 4.0},
        raw=4 * epsilon * (a_p + 1) / sigma,
        probability=True,
    )


def anticonc_explicit(epsilon: float, a_p: float, sigma_min: float, sigma_max: float) -> BoundReport:
    """Unequal variances: tail part ``eps / sigma_min`` plus the non-tail part.

    For ``eps <= sigma_min`` the non-tail part is
    ``4 eps {r a_p + (r - 1) sqrt(2 log(sigma_min/eps)) + 2 - 1/r} / sigma_min``
    with ``r = sigma_max / sigma_min``; above ``sigma_min`` the tail part alone
    already exceeds 1.
    """
    require_sigmas(sigma_min, sigma_max)
    require_positive(NonPositiveEpsilon, epsilon=epsilon)
    require_nonnegative(a_p=a_p)
    ratio = sigma_max / sigma_min
    tail = epsilon / sigma_min
    intermediates = {'ratio': ratio, 'tail_term': tail}
    if epsilon <= sigma_min:
        log_term = math.sqrt(2 * math.log(sigma_min / epsilon))
        # 2 - sigma_min/sigma_max written as 1 + (1 - ...) keeps a_p + 1 exact at ratio 1
        braces = ratio * a_p + (ratio - 1) * log_term + (1 + (1 - sigma_min / sigma_max))
        non_tail = 4 * epsilon * braces / sigma_min
        intermediates.update({'log_term': log_term, 'braces': braces, 'non_tail_term': non_tail})
        raw = tail + non_tail
    else:
        raw = tail
    return make_report(
        FormulaId.ANTICONC_EXPLICIT,
        inputs={'epsilon': epsilon, 'a_p': a_p, 'sigma_min': sigma_min, 'sigma_max': sigma_max},
        constants={'factor': 4.0},
        raw=raw,
        probability=True,
        intermediates=intermediates,
    )


def anticonc_location(epsilon: float, x: float, a_p: float, sigma_min: float, sigma_max: float) -> BoundReport:
    """Bound on ``P(|max_j X_j - x| <= eps)`` at a fixed location ``x``."""
    require_sigmas(sigma_min, sigma_max)
    require_positive(NonPositiveEpsilon, epsilon=epsilon)
    require_nonnegative(a_p=a_p)
    braces = (1 / sigma_min - 1 / sigma_max) * abs(x) + a_p + 1
    return make_report(
        FormulaId.ANTICONC_LOCATION,
        inputs={'epsilon': epsilon, 'x': x, 'a_p': a_p, 'sigma_min': sigma_min, 'sigma_max': sigma_max},
        constants={'factor': 4.0},
        raw=4 * epsilon * braces / sigma_min,
        probability=True,
        intermediates={'braces': braces},
    )


def anticonc_single(epsilon: float, sigma: float) -> BoundReport:
    """One coordinate: the exact ``sup_x P(|X - x| <= eps) <= 2 eps phi(0) / sigma``."""
    require_positive(NonPositiveSigma, sigma=sigma)
    require_positive(NonPositiveEpsilon, epsilon=epsilon)
    return make_report(
        FormulaId.ANTICONC_SINGLE,
        inputs={'epsilon': epsilon, 'sigma': sigma},
        constants={'two_phi_zero': math.sqrt(2 / math.pi)},
        raw=epsilon * math.sqrt(2 / math.pi) / sigma,
        probability=True,
    )


def anticonc_simple(epsilon: float, p: float, c: float = 1.0, equal_variance: bool = False) -> BoundReport:
    """``c eps sqrt(max(1, log(p/eps)))``; ``log p`` replaces ``log(p/eps)`` for equal variances."""
    require_positive(NegativeInput, epsilon=epsilon, c=c)
    require_p(p, 1)
    argument = math.log(p) if equal_variance else math.log(p / epsilon)
    return make_report(
        FormulaId.ANTICONC_SIMPLE,
        inputs={'epsilon': epsilon, 'p': p, 'equal_variance': float(equal_variance)},
        constants={'c': c},
        raw=c * epsilon * math.sqrt(max(1.0, argument)),
        probability=True,
        intermediates={'log_argument': argument},
    )


def ball_bound(epsilon: float, p: float, c: float = 1.0) -> BoundReport:
    """``c eps p^(1/4)``, kept for side-by-side comparison with ``anticonc_simple``."""
    require_positive(NegativeInput, epsilon=epsilon, c=c)
    require_p(p, 1)
    return make_report(
        FormulaId.BALL_BOUND,
        inputs={'epsilon': epsilon, 'p': p},
        constants={'c': c},
        raw=c * epsilon * p ** 0.25,
        probability=True,
    )


def ap_envelope(p: float) -> tuple[float, float]:
    """Envelope ``(sqrt(log p)/12, sqrt(2 log p))`` of ``E max_j X_j`` for i.i.d. N(0,1)."""
    require_p(p, 2)
    log_p = math.log(p)
    return math.sqrt(log_p) / 12, math.sqrt(2 * log_p)


def gaussian_tail(r: float, sigma: float) -> float:
    """``exp(-r^2 / (2 sigma^2))`` bounds ``P(max_j X_j >= E max_j X_j + r)``."""
    require_positive(NonPositiveInput, r=r, sigma=sigma)
    return math.exp(-r * r / (2 * sigma * sigma))


def gaussian_tail_report(r: float, sigma: float) -> BoundReport:
    return make_report(
        FormulaId.GAUSSIAN_TAIL,
        inputs={'r': r, 'sigma': sigma},
        constants={},
        raw=gaussian_tail(r, sigma),
        probability=True,
    )


def gaussian_concentration(r: float, sigma_max: float) -> BoundReport:
    """Two-sided ``P(|max_j X_j - E max_j X_j| >= r) <= 2 exp(-r^2 / (2 sigma_max^2))``."""
    return make_report(
        FormulaId.GAUSSIAN_CONCENTRATION,
        inputs={'r': r, 'sigma_max': sigma_max},
        constants={'factor': 2.0},
        raw=2 * gaussian_tail(r, sigma_max),
        probability=True,
    )
