# Copyright (c) gauss-maxima developers. All rights reserved.
"""Named verification suites behind ``gauss-maxima verify``."""
import math

import numpy as np
from loguru import logger
from scipy import integrate

from gaussmax.core import make_rng
from gaussmax.data.utils.exceptions import InvalidInput
from gaussmax.maxlaw import (
    iid_max_pdf,
    kolmogorov_distance,
    levy_concentration,
    max_density_bivariate,
    monotone_density_factor_check,
)
from gaussmax.smoothmax import (
    composite_gradient,
    composite_hessian,
    smooth_max,
    smooth_max_batch,
    smoother_g0_derivative,
)
from gaussmax.utils.config_reader import get_master_seed
from gaussmax.utils.enum_class import VerdictKind

from .config import ExperimentConfig, parse_config
from .experiments import run_experiment
from .result import RunResult, Verdict

SUITES = ('smoothmax', 'stein', 'anticonc', 'comparison', 'gumbel', 'bootstrap', 'oracles', 'determinism', 'all')
DETERMINISM_WORKERS = (1, 4, 16)


def _verdict(name: str, kind: str, passed: bool, detail: str) -> Verdict:
    if not passed:
        logger.error(f'check {name} failed: {detail}')
    return Verdict(name=name, kind=kind, passed=bool(passed), detail=detail)


def _checks_result(suite: str, verdicts: list[Verdict]) -> RunResult:
    return RunResult(config={'experiment_id': f'verify-{suite}', 'suite': suite}, verdicts=verdicts)


def smoothmax_checks(seed: int = 0, draws: int = 10_000) -> RunResult:
    """Exact sandwich on random inputs and derivatives against finite differences."""
    rng = make_rng(seed)
    verdicts = []
    dims = (1, 2, 50, 1000)
    per_dim = draws // len(dims)
    for p in dims:
        worst = 0.0
        ok = True
        for chunk in range(25):
            beta = float(10 ** rng.uniform(-2, 3))
            z = rng.normal(0.0, 10 ** rng.uniform(-3, 3), size=(max(1, per_dim // 25), p))
            values, _ = smooth_max_batch(z, beta)
            gap = values - z.max(axis=1)
            ok &= bool(np.all(gap >= 0) and np.all(gap <= np.log(p) / beta))
            worst = max(worst, float(np.max(gap * beta)))
        verdicts.append(_verdict(f'sandwich[p={p}]', VerdictKind.IDENTITY, ok,
                                 f'largest beta * (F - max)={worst:.6g}, log p={math.log(p):.6g}'))

    beta = 2.0
    h = 1e-5
    for p in (2, 5, 50):
        z = rng.normal(size=p)
        ev = smooth_max(z, beta)
        grad_fd = np.array([(smooth_max(z + h * e, beta).value - smooth_max(z - h * e, beta).value) / (2 * h)
                            for e in np.eye(p)])
        err = float(np.max(np.abs(grad_fd - ev.weights)))
        verdicts.append(_verdict(f'gradient_fd[p={p}]', VerdictKind.IDENTITY, err <= 1e-6, f'max error={err:.3g}'))

    z = rng.normal(size=5)
    ev = smooth_max(z, beta)
    eye = np.eye(z.size)

    h2 = 1e-5
    hess_fd = np.column_stack([(smooth_max(z + h2 * e, beta).weights - smooth_max(z - h2 * e, beta).weights) / (2 * h2)
                               for e in eye])
    err = float(np.max(np.abs(hess_fd - beta * ev.dense_hessian_scale())))
    verdicts.append(_verdict('hessian_fd', VerdictKind.IDENTITY, err <= 1e-4, f'max error={err:.3g}'))

    delta = 1.0
    x = ev.value - 0.4 * delta

    def composite_grad(point):
        e = smooth_max(point, beta)
        return composite_gradient(e, smoother_g0_derivative((e.value - x) / delta, 1) / delta)

    u = (ev.value - x) / delta
    hess = composite_hessian(ev, smoother_g0_derivative(u, 1) / delta, smoother_g0_derivative(u, 2) / delta ** 2)
    comp_fd = np.column_stack([(composite_grad(z + h2 * e) - composite_grad(z - h2 * e)) / (2 * h2) for e in eye])
    err = float(np.max(np.abs(comp_fd - hess)))
    verdicts.append(_verdict('composite_hessian_fd', VerdictKind.IDENTITY, err <= 1e-4, f'max error={err:.3g}'))
    return _checks_result('smoothmax', verdicts)


def oracle_checks(seed: int = 0) -> RunResult:
    """Closed-form equivalences between the max-law tools."""
    verdicts = []
    grid = np.linspace(-6.0, 6.0, 1000)
    err = float(np.max(np.abs(max_density_bivariate(grid, 0.0) - iid_max_pdf(grid, 2))))
    verdicts.append(_verdict('bivariate_equals_iid', VerdictKind.IDENTITY, err <= 1e-12, f'max error={err:.3g}'))

    for p in (1, 10, 1000):
        mass, _ = integrate.quad(lambda t: iid_max_pdf(t, p), -np.inf, np.inf, epsabs=1e-12, limit=200)
        verdicts.append(_verdict(f'iid_pdf_mass[p={p}]', VerdictKind.IDENTITY, abs(mass - 1) <= 1e-6,
                                 f'integral={mass:.12f}'))

    draws = make_rng(seed).normal(size=1000)
    distance = kolmogorov_distance(draws, draws)
    verdicts.append(_verdict('ks_self_distance', VerdictKind.IDENTITY, distance == 0.0, f'distance={distance}'))
    mass = levy_concentration(np.full(100, 3.0), 1e-6)
    verdicts.append(_verdict('levy_point_mass', VerdictKind.IDENTITY, mass == 1.0, f'mass={mass}'))

    report = monotone_density_factor_check(np.linspace(-0.9, 0.9, 7), np.linspace(-4.0, 4.0, 401))
    verdicts.append(_verdict('monotone_density_factor', VerdictKind.IDENTITY, report.passed,
                             f'max decrease={report.max_decrease:.3g}'))
    return _checks_result('oracles', verdicts)


def suite_configs(name: str) -> list[ExperimentConfig]:
    """Acceptance-size configs of a Monte Carlo suite."""
    documents = {
        'stein': [{'experiment_id': 'verify-stein', 'kind': 'stein', 'parameters': {'p': 3, 'r': 1_000_000}}],
        'anticonc': [{'experiment_id': 'verify-anticonc', 'kind': 'anticonc', 'parameters': {
            'r': 100_000, 'eps_grid': [0.001, 0.01, 0.1],
            'covariances': [{'structure': 'iid', 'p': 100},
                            {'structure': 'diagonal', 'p': 50, 'sigma_min': 1.0, 'sigma_max': 2.0}]}}],
        'comparison': [{'experiment_id': 'verify-comparison', 'kind': 'comparison', 'parameters': {
            'p': 100, 'r': 100_000, 'delta_grid': [1e-1, 1e-2, 1e-3, 1e-4], 'rho': 0.5}}],
        'gumbel': [{'experiment_id': 'verify-gumbel', 'kind': 'gumbel', 'parameters': {
            'p_grid': [1e2, 1e4, 1e6], 'r': 100_000}}],
        'bootstrap': [
            {'experiment_id': 'verify-bootstrap', 'kind': 'cmclt', 'parameters': {
                'generator': 'gaussian', 'n_grid': [500], 'p': 200, 'r': 2000, 'max_distance': 0.05,
                'coverage_reps': 2000, 'alpha': 0.05, 'coverage_tolerance': 0.02}},
            {'experiment_id': 'verify-bootstrap-case-a', 'kind': 'cmclt', 'parameters': {
                'generator': 'case_a_subexponential', 'n_grid': [250, 500, 1000, 2000], 'p': None, 'r': 1000,
                'datasets_per_n': 5}},
            {'experiment_id': 'verify-maximal', 'kind': 'maximal', 'parameters': {'n': 200, 'p': 50, 'r': 2000}},
        ],
    }
    if name not in documents:
        raise InvalidInput(f"suite '{name}' has no Monte Carlo configs")
    return [parse_config(document) for document in documents[name]]


def _small_configs() -> list[dict]:
    return [
        {'experiment_id': 'det-comparison', 'kind': 'comparison',
         'parameters': {'p': 20, 'r': 3000, 'delta_grid': [0.1, 0.01]}, 'block_size': 500},
        {'experiment_id': 'det-anticonc', 'kind': 'anticonc',
         'parameters': {'r': 3000, 'eps_grid': [0.05], 'covariances': [{'p': 20}]}, 'block_size': 500},
        {'experiment_id': 'det-gumbel', 'kind': 'gumbel', 'parameters': {'p_grid': [100], 'r': 3000},
         'block_size': 500},
        {'experiment_id': 'det-stein', 'kind': 'stein', 'parameters': {'p': 3, 'r': 4000}, 'block_size': 500},
        {'experiment_id': 'det-maximal', 'kind': 'maximal', 'parameters': {'n': 50, 'p': 10, 'r': 200},
         'block_size': 50},
        {'experiment_id': 'det-cmclt', 'kind': 'cmclt',
         'parameters': {'n_grid': [60, 120], 'p': 8, 'r': 1000, 'coverage_reps': 60}},
    ]


def determinism_checks(worker_counts=DETERMINISM_WORKERS) -> RunResult:
    """Every reduced experiment must serialize to the same bytes for each worker count."""
    verdicts = []
    master_seed = get_master_seed()
    for document in _small_configs():
        outputs = {}
        for workers in worker_counts:
            cfg = ExperimentConfig.model_validate({**document, 'parallelism': workers, 'master_seed': master_seed})
            outputs[workers] = run_experiment(cfg).to_json()
        identical = len(set(outputs.values())) == 1
        verdicts.append(_verdict(f"determinism[{document['experiment_id']}]", VerdictKind.IDENTITY, identical,
                                 f'worker counts {list(worker_counts)}'))
    return _checks_result('determinism', verdicts)


def run_suite(name: str) -> list[RunResult]:
    if name not in SUITES:
        raise InvalidInput(f"unknown suite '{name}'; suites are {', '.join(SUITES)}")
    if name == 'all':
        return [result for suite in SUITES[:-1] for result in run_suite(suite)]
    logger.info(f"verify suite '{name}' started")
    if name == 'smoothmax':
        return [smoothmax_checks()]
    if name == 'oracles':
        return [oracle_checks()]
    if name == 'determinism':
        return [determinism_checks()]
    return [run_experiment(cfg) for cfg in suite_configs(name)]
