# Copyright (c) gauss-maxima developers. All rights reserved.
import math

import numpy as np
import pytest
from scipy import integrate, stats

from gaussmax.core import equicorrelated
from gaussmax.core.sampler import GaussianSampler
from gaussmax.data.data_reader_writer import FileBasedDataReader, FileBasedDataWriter
from gaussmax.data.utils.exceptions import (
    AlphaOutOfRange,
    EmptyInput,
    NonPositiveEpsilon,
    NonPositiveSigma,
    ParseError,
    POutOfRange,
    RhoOutOfRange,
)
from gaussmax.maxlaw import (
    SampleSet,
    calibrated_max_cdf,
    conditional_below_probability,
    dkw_allowance,
    gumbel_approx_density,
    gumbel_calibration,
    gumbel_cdf,
    gumbel_cdf_gap,
    iid_max_cdf,
    iid_max_pdf,
    iid_max_quantile_draws,
    kolmogorov_distance,
    levy_concentration,
    max_density_bivariate,
    max_density_histogram,
    max_density_mc,
    monotone_density_factor_check,
    norm_cdf,
    normal_scale_ks,
    two_sample_allowance,
)


def test_sample_set_sorts_and_freezes():
    samples = SampleSet.from_draws([3.0, 1.0, 2.0, 4.0], seed=1, experiment_id='unit')
    np.testing.assert_array_equal(samples.draws, [1.0, 2.0, 3.0, 4.0])
    assert not samples.draws.flags.writeable
    assert samples.size == 4
    assert samples.mean() == 2.5
    assert samples.quantile(0.5) == 2.0
    np.testing.assert_array_equal(samples.ecdf([0.5, 2.0, 10.0]), [0.0, 0.5, 1.0])
    assert samples.provenance.generator == 'philox4x64'


def test_quantile_rank_does_not_round_up():
    samples = SampleSet.from_draws(np.arange(1, 2001), seed=0, experiment_id='unit')
    assert samples.quantile(0.95) == 1900.0
    with pytest.raises(AlphaOutOfRange):
        samples.quantile(1.0)


def test_sample_set_rejects_empty():
    with pytest.raises(EmptyInput):
        SampleSet.from_draws([], seed=0, experiment_id='unit')


def test_sample_set_write_and_read(tmp_path):
    samples = SampleSet.from_draws([0.1, 1 / 3, 2.5], seed=42, experiment_id='unit')
    samples.write(FileBasedDataWriter(str(tmp_path)), 'maxima')
    loaded = SampleSet.read(FileBasedDataReader(str(tmp_path)), 'maxima')
    np.testing.assert_array_equal(loaded.draws, samples.draws)
    assert loaded.provenance == samples.provenance


def test_sample_set_sidecar_mismatch(tmp_path):
    writer = FileBasedDataWriter(str(tmp_path))
    SampleSet.from_draws([1.0, 2.0], seed=1, experiment_id='unit').write(writer, 'maxima')
    writer.write_string('maxima.csv', '1\n2\n3\n')
    with pytest.raises(ParseError):
        SampleSet.read(FileBasedDataReader(str(tmp_path)), 'maxima')


def test_levy_concentration_uses_closed_windows():
    assert levy_concentration([0.0, 1.0, 2.0, 3.0], 0.5) == 0.5
    assert levy_concentration([0.0, 1.0, 2.0, 3.0], 0.49) == 0.25
    assert levy_concentration([1.0, 1.0, 1.0], 1e-9) == 1.0
    with pytest.raises(NonPositiveEpsilon):
        levy_concentration([0.0], 0.0)


def test_kolmogorov_distance_two_samples():
    a = SampleSet.from_draws([0.0, 1.0, 2.0], seed=0, experiment_id='unit')
    assert kolmogorov_distance(a, a) == 0.0
    assert kolmogorov_distance([0.0, 1.0], [5.0, 6.0]) == 1.0
    assert kolmogorov_distance([0.0, 1.0], [0.5, 1.5]) == 0.5


def test_kolmogorov_distance_against_cdf():
    assert kolmogorov_distance([0.0], norm_cdf) == pytest.approx(0.5)
    draws = stats.norm.rvs(size=100_000, random_state=np.random.default_rng(5))
    assert kolmogorov_distance(draws, norm_cdf) <= 2 * dkw_allowance(100_000)


def test_allowances():
    assert dkw_allowance(10_000) == pytest.approx(0.0136)
    assert two_sample_allowance(10_000) == pytest.approx(0.0272)


def test_normal_scale_ks():
    assert normal_scale_ks(1.0, 1.0) == 0.0
    assert normal_scale_ks(1.0, 2.0) == pytest.approx(normal_scale_ks(2.0, 1.0))
    x = np.linspace(-10, 10, 200001)
    brute = np.max(np.abs(stats.norm.cdf(x) - stats.norm.cdf(x / 1.3)))
    assert normal_scale_ks(1.0, 1.3) == pytest.approx(brute, abs=1e-8)
    with pytest.raises(NonPositiveSigma):
        normal_scale_ks(0.0, 1.0)


def test_iid_max_law():
    assert iid_max_pdf(0.0, 1) == pytest.approx(0.39894, abs=1e-5)
    assert iid_max_pdf(0.0, 2) == pytest.approx(0.39894, abs=1e-5)
    assert iid_max_cdf(0.0, 3) == pytest.approx(0.125)
    mass, _ = integrate.quad(lambda x: iid_max_pdf(x, 100), -10, 10, limit=200)
    assert mass == pytest.approx(1.0, abs=1e-6)
    with pytest.raises(POutOfRange):
        iid_max_cdf(0.0, 0)


def test_iid_max_draws_follow_the_exact_law():
    samples = iid_max_quantile_draws(100, 100_000, seed=3)
    assert kolmogorov_distance(samples, lambda x: iid_max_cdf(x, 100)) <= 2 * dkw_allowance(100_000)
    assert 0.179 < samples.mean() < 3.035
    assert samples.mean() == pytest.approx(2.5, abs=0.05)


def test_iid_max_draws_for_huge_p_are_finite():
    samples = iid_max_quantile_draws(1e7, 1000, seed=4)
    assert np.all(np.isfinite(samples.draws))
    assert 4.5 < samples.mean() < 6.5


def test_gumbel_calibration():
    cal = gumbel_calibration(100)
    assert cal.b_p == pytest.approx(3.03485, abs=1e-5)
    assert cal.d_p == pytest.approx(2.3663, abs=1e-4)
    np.testing.assert_allclose(cal.rescale([cal.d_p]), [0.0])
    assert gumbel_cdf(0.0) == pytest.approx(math.exp(-1))
    with pytest.raises(POutOfRange):
        gumbel_calibration(2)


def test_gumbel_gap_shrinks_with_p():
    gaps = [gumbel_cdf_gap(p) for p in (1e2, 1e4, 1e6)]
    assert gaps[0] > gaps[1] > gaps[2]
    assert gaps[2] < 0.05
    assert calibrated_max_cdf(0.0, 1e6) == pytest.approx(math.exp(-1), abs=0.05)


def test_gumbel_density_at_zero():
    assert gumbel_approx_density(0.0, 1e6) == pytest.approx(math.exp(-1), abs=0.025)
    mass, _ = integrate.quad(lambda x: gumbel_approx_density(x, 1e3), -20, 40, limit=200)
    assert mass == pytest.approx(1.0, abs=1e-6)


def test_bivariate_density():
    assert max_density_bivariate(0.0, 0.0) == pytest.approx(0.39894, abs=1e-5)
    mass, _ = integrate.quad(lambda x: max_density_bivariate(x, 0.5), -12, 12)
    assert mass == pytest.approx(1.0, abs=1e-8)
    x = np.linspace(-4, 4, 41)
    np.testing.assert_allclose(max_density_bivariate(x, 0.0), iid_max_pdf(x, 2), atol=1e-12)
    with pytest.raises(RhoOutOfRange):
        max_density_bivariate(0.0, 1.0)


def test_monte_carlo_density_matches_closed_form():
    x = np.linspace(-1.5, 1.5, 7)
    density, standard_error = max_density_mc(x, equicorrelated(2, 0.5), 20_000, seed=9)
    exact = max_density_bivariate(x, 0.5)
    assert np.all(np.abs(density - exact) <= 5 * standard_error + 1e-3)


def test_histogram_density_matches_closed_form():
    draws = GaussianSampler(equicorrelated(2, 0.5), seed=10).sample_max(200_000)
    samples = SampleSet.from_draws(draws, seed=10, experiment_id='unit')
    centers, density, standard_error = max_density_histogram(samples, bins=50, value_range=(-3.0, 3.0))
    exact = max_density_bivariate(centers, 0.5)
    # bin averages differ from the midpoint value by O(width^2)
    assert np.all(np.abs(density - exact) <= 5 * standard_error + 2e-3)


def test_conditional_below_probability_edges():
    x = np.array([-1.0, 0.0, 1.0])
    np.testing.assert_array_equal(conditional_below_probability(x, 1.0, 0.5, 0.0), [1.0, 1.0, 1.0])
    np.testing.assert_array_equal(conditional_below_probability(x, -1.0, 0.0, 0.0), [0.0, 1.0, 1.0])
    np.testing.assert_allclose(conditional_below_probability(x, 0.0, 0.0), stats.norm.cdf(x))


def test_monotone_density_factor():
    report = monotone_density_factor_check([-0.9, -0.3, 0.0, 0.5, 0.99], np.linspace(-5, 5, 201))
    assert report.passed
    assert len(report.cases) == 15
    assert report.to_dict()['passed'] is True
