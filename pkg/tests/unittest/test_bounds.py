# Copyright (c) gauss-maxima developers. All rights reserved.
import math

import numpy as np
import pytest
from scipy import stats

from gaussmax.bounds import (
    anticonc_equal,
    anticonc_explicit,
    anticonc_location,
    anticonc_simple,
    anticonc_single,
    ap_envelope,
    ball_bound,
    case_b_rate,
    comparison_max,
    comparison_optimized,
    comparison_smooth,
    deltahat_bound,
    evaluate,
    evaluate_with_constant,
    gaussian_concentration,
    gaussian_tail,
    kolmogorov_explicit,
    kolmogorov_shape,
    maximal_inequality,
    maximal_nonnegative,
    sudakov_fernique,
)
from gaussmax.data.utils.exceptions import (
    InvalidInput,
    NegativeInput,
    NonPositiveEpsilon,
    NonPositiveInput,
    NonPositiveSigma,
    POutOfRange,
)
from gaussmax.smoothmax import g0_norms
from gaussmax.utils.enum_class import FormulaId


def test_comparison_smooth():
    assert comparison_smooth(1, 1, 0.0, 2).value == 0.0
    assert comparison_smooth(1, 1, 0.1, 2).value == pytest.approx(0.25)
    g1, g2 = g0_norms()
    assert comparison_smooth(g1, g2, 0.01, 10).value == pytest.approx(0.21637, abs=1e-5)


def test_comparison_max():
    assert comparison_max(1, 1, 0.1, 2, 1).value == pytest.approx(comparison_smooth(1, 1, 0.1, 2).value)
    assert comparison_max(1, 0, 0.0, 1, math.e).value == pytest.approx(2.0)
    beta_star = math.sqrt(2 * math.log(100) / 0.04)
    assert comparison_max(1, 1, 0.04, beta_star, 100).value == pytest.approx(
        comparison_optimized(1, 1, 0.04, 100).value)


def test_comparison_optimized_is_the_grid_minimum():
    report = comparison_optimized(1, 0, 0.01, 100)
    assert report.value == pytest.approx(0.60697, abs=1e-5)
    assert comparison_optimized(1, 1, 0.0, 100).value == 0.0
    grid = np.logspace(-2, 4, 60001)
    best = min(comparison_max(1, 0, 0.01, beta, 100).value for beta in grid)
    assert best == pytest.approx(report.value, abs=1e-6)
    assert report.intermediates['beta_star'] == pytest.approx(math.sqrt(2 * math.log(100) / 0.01))


def test_sudakov_fernique():
    assert sudakov_fernique(0.0, 10).value == 0.0
    assert sudakov_fernique(0.01, 100).value == pytest.approx(0.60697, abs=1e-5)
    assert sudakov_fernique(1, 2).value == pytest.approx(2.3548, abs=1e-4)
    with pytest.raises(POutOfRange):
        sudakov_fernique(0.1, 1)


def test_kolmogorov_shape():
    assert kolmogorov_shape(0.0, 100).value == 0.0
    assert kolmogorov_shape(1.0, math.e).value == pytest.approx(1.0)
    report = kolmogorov_shape(0.001, 100)
    assert report.value == pytest.approx(0.1 * math.log(1e5) ** (2 / 3))
    assert report.value == pytest.approx(0.51, abs=0.01)
    assert kolmogorov_shape(0.5, 1e6, c=10).capped
    with pytest.raises(NegativeInput):
        kolmogorov_shape(-0.1, 100)


def test_kolmogorov_explicit_scales_like_cube_root():
    reports = [kolmogorov_explicit(delta, 100, 1.0, 1.0) for delta in (1e-2, 1e-4, 1e-6)]
    values = [r.value for r in reports]
    assert values[0] >= values[1] >= values[2]
    assert values[2] < 1.0
    assert reports[2].raw_value / reports[1].raw_value == pytest.approx(0.01 ** (1 / 3), rel=1e-9)
    terms = reports[2].intermediates
    assert terms['e_beta'] == pytest.approx(terms['smoothing_delta'])
    assert terms['window_epsilon'] == pytest.approx(2 * terms['smoothing_delta'])
    assert terms['one_sided'] == pytest.approx(terms['smoothing_cost'] + terms['window_cost'])
    assert reports[2].raw_value == pytest.approx(terms['one_sided'])


def test_kolmogorov_explicit_equal_sigma_window_keeps_tail_term():
    report = kolmogorov_explicit(1e-6, 100, 1.0, 1.0)
    terms = report.intermediates
    eps = terms['window_epsilon']
    a_p = report.inputs['a_p']
    assert a_p == pytest.approx(math.sqrt(2 * math.log(100)))
    assert terms['smoothing_delta'] == pytest.approx(1e-2 * (2 * math.log(100)) ** (1 / 6))
    assert terms['window_cost'] == pytest.approx(anticonc_explicit(eps, a_p, 1.0, 1.0).value)
    assert terms['window_cost'] == pytest.approx(anticonc_equal(eps, a_p, 1.0).value + eps)
    g1, g2 = g0_norms()
    delta_s = terms['smoothing_delta']
    by_hand = (g2 / 2 / delta_s ** 2 + g1 * math.log(100) / delta_s ** 2) * 1e-6 \
        + eps + 4 * eps * (a_p + 1)
    assert report.raw_value == pytest.approx(by_hand, rel=1e-12)
    assert report.value < 1.0
    assert not report.capped


def test_kolmogorov_explicit_edges():
    assert kolmogorov_explicit(0.0, 100, 1.0, 2.0).value == 0.0
    report = kolmogorov_explicit(2.0, 100, 1.0, 1.0)
    assert report.value == 1.0
    assert report.capped
    assert report.probability
    assert report.intermediates['delta_out_of_range'] == 1.0
    equal = kolmogorov_explicit(1e-6, 100, 1.0, 1.0)
    unequal = kolmogorov_explicit(1e-6, 100, 1.0, 1.5)
    assert unequal.raw_value > equal.raw_value
    with pytest.raises(NonPositiveSigma):
        kolmogorov_explicit(1e-6, 100, 2.0, 1.0)


def test_anticonc_equal():
    report = anticonc_equal(0.01, 0.0, 1.0)
    assert report.value == pytest.approx(0.04)
    assert 2 * stats.norm.cdf(0.01) - 1 <= report.value
    assert anticonc_equal(0.02, 0.0, 1.0).value == pytest.approx(2 * report.value)
    capped = anticonc_equal(1.0, 10.0, 1.0)
    assert capped.value == 1.0
    assert capped.capped
    assert capped.raw_value == pytest.approx(44.0)
    with pytest.raises(NonPositiveEpsilon):
        anticonc_equal(0.0, 1.0, 1.0)
    with pytest.raises(NonPositiveSigma):
        anticonc_equal(0.1, 1.0, 0.0)


def test_anticonc_explicit_by_hand():
    report = anticonc_explicit(0.01, 3.035, 1.0, 2.0)
    log_term = math.sqrt(2 * math.log(100))
    expected = 0.01 + 0.04 * (2 * 3.035 + log_term + 1.5)
    assert report.value == pytest.approx(expected, rel=1e-12)
    assert report.value == pytest.approx(0.4341942, rel=1e-6)
    assert report.intermediates['tail_term'] == pytest.approx(0.01)


def test_anticonc_explicit_reduces_to_equal_variances():
    explicit = anticonc_explicit(0.01, 2.5, 1.0, 1.0)
    assert explicit.value == pytest.approx(anticonc_equal(0.01, 2.5, 1.0).value + 0.01)
    wide = anticonc_explicit(2.0, 1.0, 1.0, 2.0)
    assert wide.value == 1.0
    assert 'braces' not in wide.intermediates


def test_anticonc_location_and_single():
    assert anticonc_location(0.01, 0.0, 2.0, 1.0, 3.0).value == pytest.approx(0.04 * 3.0)
    far = anticonc_location(0.01, 5.0, 2.0, 1.0, 3.0).value
    assert far > anticonc_location(0.01, 0.0, 2.0, 1.0, 3.0).value
    single = anticonc_single(0.01, 1.0)
    assert single.value == pytest.approx(0.01 * math.sqrt(2 / math.pi))
    assert 2 * stats.norm.cdf(0.01) - 1 <= single.value


def test_anticonc_simple_and_ball():
    assert anticonc_simple(1.0, math.e).value == pytest.approx(1.0)
    assert anticonc_simple(0.01, 100).value == pytest.approx(0.01 * math.sqrt(math.log(1e4)))
    assert anticonc_simple(0.01, 100, equal_variance=True).value == pytest.approx(0.01 * math.sqrt(math.log(100)))
    assert ball_bound(0.5, 1).value == pytest.approx(0.5)
    assert ball_bound(0.1, 16).value == pytest.approx(0.2)
    ratio = ball_bound(0.01, 1e8).raw_value / anticonc_simple(0.01, 1e8).raw_value
    assert ratio > 20


def test_ap_envelope():
    lower, upper = ap_envelope(100)
    assert upper == pytest.approx(3.0349, abs=1e-4)
    assert lower == pytest.approx(0.17882, abs=1e-5)
    with pytest.raises(POutOfRange):
        ap_envelope(1)


def test_gaussian_tail_and_concentration():
    assert gaussian_tail(1.0, 1.0) == pytest.approx(math.exp(-0.5))
    assert gaussian_tail(1e-9, 1.0) == pytest.approx(1.0)
    concentration = gaussian_concentration(3.0, 1.0)
    assert concentration.value == pytest.approx(2 * math.exp(-4.5))
    assert gaussian_concentration(0.1, 1.0).capped
    with pytest.raises(NonPositiveInput):
        gaussian_tail(0.0, 1.0)


def test_maximal_inequalities():
    assert maximal_inequality(0.0, 0.0, 10).value == 0.0
    assert maximal_inequality(100.0, 1.0, math.e).value == pytest.approx(11.0)
    assert maximal_inequality(100.0, 1.0, math.e, c=2).value == pytest.approx(22.0)
    assert maximal_nonnegative(0.0, 0.0, 10).value == 0.0
    assert maximal_nonnegative(3.0, 1.0, math.e).value == pytest.approx(4.0)
    assert deltahat_bound(0.0, 0.0, 100, 10).value == 0.0
    values = [deltahat_bound(1.0, 1.0, n, 50).value for n in (10, 100, 1000, 10000)]
    assert all(a > b for a, b in zip(values, values[1:]))


def test_case_b_rate():
    report = case_b_rate(1e6, 10, 1.0, 2.0)
    assert report.value == pytest.approx(math.log(10) ** 5 / 1e6)
    assert report.intermediates['second_term'] == pytest.approx(math.log(10) ** 4)
    with pytest.raises(NonPositiveInput):
        case_b_rate(1e6, 10, 0.5, 2.0)
    with pytest.raises(NonPositiveInput):
        case_b_rate(1e6, 10, 1.0, 0.5)


def test_evaluate_by_id():
    report = evaluate('kolmogorov_shape', {'delta': '0.001', 'p': 100})
    assert report.formula_id is FormulaId.KOLMOGOROV_SHAPE
    assert report.value == pytest.approx(kolmogorov_shape(0.001, 100).value)
    assert evaluate_with_constant('kolmogorov_shape', {'delta': 0.001, 'p': 100}, 2.0).value == pytest.approx(
        2 * report.value)
    simple = evaluate('anticonc_simple', {'epsilon': 0.01, 'p': 100, 'equal_variance': 'true'})
    assert simple.inputs['equal_variance'] == 1.0
    assert evaluate('anticonc_simple', {'epsilon': 0.01, 'p': 100, 'equal_variance': 1.0}).value == simple.value


@pytest.mark.parametrize(
    'formula_id, inputs',
    [
        ('no_such_bound', {}),
        ('sudakov_fernique', {'delta': 0.1}),
        ('sudakov_fernique', {'delta': 0.1, 'p': 10, 'q': 1}),
        ('sudakov_fernique', {'delta': 'abc', 'p': 10}),
        ('anticonc_simple', {'epsilon': 0.1, 'p': 10, 'equal_variance': 'maybe'}),
    ],
)
def test_evaluate_rejects(formula_id, inputs):
    with pytest.raises(InvalidInput):
        evaluate(formula_id, inputs)


def test_report_to_dict():
    data = anticonc_equal(1.0, 10.0, 1.0).to_dict()
    assert data['formula_id'] == 'anticonc_equal'
    assert data['value'] == 1.0
    assert data['capped'] is True
    assert data['constants'] == {'factor': 4.0}
