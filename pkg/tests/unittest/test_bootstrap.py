# Copyright (c) gauss-maxima developers. All rights reserved.
import json

import numpy as np
import pytest

from gaussmax.bootstrap import (
    Dataset,
    bootstrap_quantile,
    case_a_subexponential,
    case_b_regression,
    cmclt_check,
    delta_hat,
    gaussian,
    generate_dataset,
    gram_matched,
    load_dataset,
    multiplier_replicates,
    normalized_sum,
    regression_design,
    run_bootstrap,
    write_dataset,
)
from gaussmax.core import equicorrelated
from gaussmax.data.data_reader_writer import FileBasedDataWriter
from gaussmax.data.utils.exceptions import (
    AlphaOutOfRange,
    DimensionMismatch,
    EmptyData,
    InvalidInput,
    NonFiniteEntries,
    ParseError,
)
from gaussmax.maxlaw import SampleSet, kolmogorov_distance, normal_scale_ks, two_sample_allowance
from gaussmax.utils.enum_class import DatasetFormat, ReplicatePath
from gaussmax.utils.hash_utils import bytes_sha256


def test_load_csv_dataset(tmp_path):
    path = tmp_path / 'z.csv'
    path.write_bytes(b'1,0\n0,1\n')
    ds = load_dataset(path)
    assert (ds.n, ds.p) == (2, 2)
    np.testing.assert_array_equal(ds.second_moments, 0.5 * np.eye(2))
    assert ds.fingerprint == bytes_sha256(b'1,0\n0,1\n')


def test_load_dataset_errors(tmp_path):
    empty = tmp_path / 'empty.csv'
    empty.write_bytes(b'')
    with pytest.raises(EmptyData):
        load_dataset(empty)

    ragged = tmp_path / 'ragged.csv'
    ragged.write_bytes(b'1,2\n3\n')
    with pytest.raises(ParseError) as excinfo:
        load_dataset(ragged)
    assert excinfo.value.line == 2
    assert 'line 2' in str(excinfo.value)

    nan = tmp_path / 'nan.csv'
    nan.write_bytes(b'1,nan\n')
    with pytest.raises(NonFiniteEntries):
        load_dataset(nan)


def test_binary_dataset(tmp_path):
    z = np.arange(12, dtype=np.float64).reshape(4, 3) / 7
    write_dataset(Dataset.from_array(z), 'z.gmax', fmt=DatasetFormat.BINARY,
                  writer=FileBasedDataWriter(str(tmp_path)))
    ds = load_dataset(tmp_path / 'z.gmax')
    np.testing.assert_array_equal(ds.z, z)

    (tmp_path / 'short.gmax').write_bytes(b'GMAX1' + b'\x00' * 3)
    with pytest.raises(ParseError):
        load_dataset(tmp_path / 'short.gmax')


def test_dataset_is_read_only():
    ds = Dataset.from_array([[1.0, 2.0], [3.0, 4.0]])
    assert not ds.z.flags.writeable
    assert not ds.second_moments.flags.writeable
    with pytest.raises(InvalidInput):
        Dataset.from_array([1.0, 2.0])


def test_normalized_sum_and_delta_hat():
    ds = Dataset.from_array([[1.0, -1.0], [1.0, 1.0], [1.0, 0.0], [1.0, 0.0]])
    np.testing.assert_allclose(normalized_sum(ds), [2.0, 0.0])
    assert delta_hat(ds, ds.second_moments) == 0.0
    assert delta_hat(ds, np.eye(2)) == pytest.approx(0.5)
    with pytest.raises(DimensionMismatch):
        delta_hat(ds, np.eye(3))


def test_fourth_moment_summary_of_signs():
    signs = np.where(np.random.default_rng(0).random((50, 4)) < 0.5, -1.0, 1.0)
    assert Dataset.from_array(signs).fourth_moment_summary() == (1.0, 1.0)


def test_bootstrap_quantile():
    assert bootstrap_quantile(SampleSet.from_draws([1, 2, 3, 4], seed=0, experiment_id='unit'), 0.5) == 2.0
    ranks = SampleSet.from_draws(np.arange(1, 2001), seed=0, experiment_id='unit')
    assert bootstrap_quantile(ranks, 0.05) == 1900.0
    with pytest.raises(AlphaOutOfRange):
        bootstrap_quantile(ranks, 0.0)


def test_replicates_are_seeded():
    ds, _ = gaussian(100, equicorrelated(5, 0.3), seed=1)
    a = multiplier_replicates(ds, 500, seed=2)
    b = multiplier_replicates(ds, 500, seed=2)
    np.testing.assert_array_equal(a.draws, b.draws)
    assert a.provenance.seed == 2


def test_covariance_and_multiplier_paths_agree():
    ds, _ = gaussian(60, equicorrelated(8, 0.2), seed=3)
    covariance = multiplier_replicates(ds, 4000, seed=4, path=ReplicatePath.COVARIANCE)
    multiplier = multiplier_replicates(ds, 4000, seed=5, path=ReplicatePath.MULTIPLIER)
    assert kolmogorov_distance(covariance, multiplier) <= two_sample_allowance(4000)


def test_cmclt_check_on_gram_matched_data():
    spec = equicorrelated(10, 0.4)
    ds, reference = gram_matched(50, spec)
    np.testing.assert_allclose(ds.second_moments, reference, atol=1e-12)
    report = cmclt_check(ds, spec, 2000, seed=6)
    assert report.delta_hat < 1e-12
    assert report.prediction < 1e-3
    assert report.within_prediction
    assert set(report.seeds) == {'multiplier', 'analog'}
    assert report.to_dict()['within_prediction'] is True


def test_cmclt_check_single_coordinate():
    ds = Dataset.from_array(np.full((4, 1), 2.0))
    report = cmclt_check(ds, equicorrelated(1, 1.0), 1000, seed=7)
    assert report.delta_hat == pytest.approx(3.0)
    assert report.prediction == pytest.approx(normal_scale_ks(2.0, 1.0))
    assert report.within_prediction


def test_cmclt_check_rejects():
    ds, _ = gaussian(20, equicorrelated(3, 0.0), seed=1)
    with pytest.raises(InvalidInput):
        cmclt_check(ds, equicorrelated(3, 0.0), 999, seed=0)
    with pytest.raises(DimensionMismatch):
        cmclt_check(ds, equicorrelated(4, 0.0), 1000, seed=0)


def test_run_bootstrap_with_reference(tmp_path):
    spec = equicorrelated(4, 0.5)
    ds, _ = gaussian(200, spec, seed=8)
    run = run_bootstrap(ds, 1000, seed=9, reference=spec)
    assert set(run.seeds) == {'multiplier', 'analog'}
    assert run.delta_hat == pytest.approx(delta_hat(ds, spec))
    assert run.quantile(0.05) >= run.quantile(0.5)

    run.write(FileBasedDataWriter(str(tmp_path)), ds, alphas=(0.05, 0.1))
    manifest = json.loads((tmp_path / 'manifest.json').read_text(encoding='utf-8'))
    assert manifest['r'] == 1000
    assert manifest['path'] == 'covariance'
    assert set(manifest['quantiles']) == {'0.05', '0.1'}
    assert (tmp_path / 'replicates.csv').exists()
    assert (tmp_path / 'gaussian_analog.json').exists()


def test_run_bootstrap_without_reference():
    ds, _ = gaussian(50, equicorrelated(3, 0.0), seed=10)
    run = run_bootstrap(ds, 200, seed=11)
    assert run.gaussian_analog is None
    assert run.delta_hat is None
    assert run.manifest(ds).delta_hat is None


def test_gram_matched_needs_enough_rows():
    with pytest.raises(InvalidInput):
        gram_matched(3, equicorrelated(4, 0.0))


def test_case_a_has_unit_variance():
    ds, reference = case_a_subexponential(20000, 3, seed=12)
    np.testing.assert_array_equal(reference, np.eye(3))
    np.testing.assert_allclose(np.diag(ds.second_moments), 1.0, atol=0.07)


def test_regression_design():
    x = regression_design(400, 5, 2.0, seed=13)
    np.testing.assert_allclose(np.mean(x * x, axis=0), 1.0)
    assert np.abs(x).max() <= 2.0 + 1e-12
    flat = regression_design(400, 5, 1.0, seed=13)
    np.testing.assert_allclose(np.abs(flat), 1.0)


def test_case_b_shares_the_design():
    a, ref_a = case_b_regression(300, 6, 2.0, 2.0, seed=14)
    b, ref_b = case_b_regression(300, 6, 2.0, 2.0, seed=15)
    np.testing.assert_array_equal(ref_a, ref_b)
    assert not np.array_equal(a.z, b.z)
    np.testing.assert_allclose(np.diag(ref_a), 1.0)


def test_generate_dataset_dispatch():
    ds, reference = generate_dataset('gaussian', 30, 4, seed=16, rho=0.25)
    again, _ = generate_dataset('gaussian', 30, 4, seed=16, rho=0.25)
    np.testing.assert_array_equal(ds.z, again.z)
    assert reference[0, 1] == 0.25
    ds, _ = generate_dataset('case_b_regression', 256, 3, seed=17)
    assert ds.p == 3
    with pytest.raises(ValueError):
        generate_dataset('cauchy', 10, 2, seed=0)
