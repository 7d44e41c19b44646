# Copyright (c) gauss-maxima developers. All rights reserved.
import functools
import json
import sys

import click
from loguru import logger

from gaussmax.bounds import evaluate
from gaussmax.bounds.registry import formula_parameters
from gaussmax.data.utils.exceptions import BoundViolation, GaussMaxError
from gaussmax.harness import load_config, run_suite
from gaussmax.harness.suite import SUITES
from gaussmax.utils.cli_parser import arg_parse, parse_inputs
from gaussmax.utils.config_reader import get_default_constant, get_log_level, get_master_seed, get_output_dir
from gaussmax.utils.enum_class import FormulaId, ReplicatePath

from ..version import __version__
from .common import do_bootstrap, do_report, do_run

EXIT_PASS = 0
EXIT_VIOLATION = 1
EXIT_CONFIG = 2


def _exit_codes(fn):
    """Map outcomes to exit codes: violations 1, invalid config or input 2."""
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            fn(*args, **kwargs)
        except BoundViolation as e:
            logger.error(str(e))
            sys.exit(EXIT_VIOLATION)
        except GaussMaxError as e:
            logger.error(str(e))
            sys.exit(EXIT_CONFIG)
        except Exception as e:
            logger.exception(e)
            sys.exit(EXIT_CONFIG)
        sys.exit(EXIT_PASS)
    return wrapper


@click.group()
@click.version_option(__version__,
                      '--version',
                      '-v',
                      help='display the version and exit')
def main():
    """Gaussian maxima: bounds, max-law tools, multiplier bootstrap and the Monte Carlo harness."""
    logger.remove()
    logger.add(sys.stderr, level=get_log_level())


@main.command()
@click.argument('config_path', type=click.Path())
@click.option(
    '-o',
    '--output-dir',
    'output_dir',
    type=click.Path(),
    help='directory that receives <experiment_id>/; defaults to harness.output_dir of the user config',
    default=None,
)
@click.option('-w', '--workers', 'workers', type=click.IntRange(min=1), default=None,
              help='worker threads; overrides the config file')
@click.option('--overwrite', is_flag=True, help='replace an existing run directory')
@click.option('--no-persist', is_flag=True, help='run without writing the run directory')
@_exit_codes
def run(config_path, output_dir, workers, overwrite, no_persist):
    """Run the experiment described by a JSON config."""
    cfg = load_config(config_path)
    if workers is not None:
        cfg = cfg.model_copy(update={'parallelism': workers})
    result = do_run(cfg, None if no_persist else (output_dir or get_output_dir()), overwrite)
    click.echo(f"{cfg.experiment_id}: {'pass' if result.passed else 'FAIL'} "
               f'({len(result.records)} records, {len(result.violations)} violations)')
    if not result.passed:
        first = result.violations[0]
        raise BoundViolation(f'{first.name} at grid point {first.grid_index}, seed {first.seed}: {first.detail}')


@main.command(context_settings=dict(ignore_unknown_options=True, allow_extra_args=True))
@click.pass_context
@click.argument('formula_id', type=click.Choice([f.value for f in FormulaId]))
@click.option('-i', '--inputs', 'inputs', type=str, default=None,
              help="comma separated name=value pairs, e.g. 'delta=1e-6,p=100,sigma_min=1,sigma_max=1'")
@_exit_codes
def bound(ctx, formula_id, inputs):
    """Evaluate one bound and print its report as JSON.

    Inputs may also be given as extra options, e.g. ``--delta 0.01 --p 100``.
    """
    values = {**parse_inputs(inputs), **arg_parse(ctx)}
    if 'c' in formula_parameters(formula_id) and 'c' not in values:
        values['c'] = get_default_constant(formula_id)
    report = evaluate(formula_id, values)
    click.echo(json.dumps(report.to_dict(), sort_keys=True, indent=2))


@main.command()
@click.argument('data_path', type=click.Path())
@click.option('-r', '--replicates', 'replicates', type=click.IntRange(min=1), required=True,
              help='number of bootstrap replicates R')
@click.option('-a', '--alpha', 'alphas', type=float, multiple=True, default=(0.05,), show_default=True,
              help='quantile level(s); the (1 - alpha) quantile is reported')
@click.option('-s', '--seed', 'seed', type=int, default=None, help='seed; GAUSS_MAXIMA_SEED wins when set')
@click.option('--reference', 'reference_path', type=click.Path(), default=None,
              help='CSV covariance of the population second moments; adds the Gaussian analog and delta_hat')
@click.option('--path', 'replicate_path', type=click.Choice([p.value for p in ReplicatePath]),
              default=ReplicatePath.COVARIANCE.value, show_default=True)
@click.option('-f', '--format', 'fmt', type=click.Choice(['auto', 'csv', 'binary']), default='auto',
              show_default=True)
@click.option('-o', '--output-dir', 'output_dir', type=click.Path(), default=None,
              help='write replicates, sidecars and manifest.json here')
@_exit_codes
def bootstrap(data_path, replicates, alphas, seed, reference_path, replicate_path, fmt, output_dir):
    """Multiplier bootstrap quantiles of the max of a dataset."""
    bootstrap_run = do_bootstrap(data_path, replicates, alphas, get_master_seed(seed), reference_path,
                                 replicate_path, fmt, output_dir)
    summary = {
        'r': replicates,
        'path': replicate_path,
        'seeds': bootstrap_run.seeds,
        'delta_hat': bootstrap_run.delta_hat,
        'quantiles': {f'{alpha:g}': bootstrap_run.quantile(alpha) for alpha in alphas},
    }
    click.echo(json.dumps(summary, sort_keys=True, indent=2))


@main.command()
@click.argument('suite', type=click.Choice(list(SUITES)))
@_exit_codes
def verify(suite):
    """Run a named acceptance suite."""
    results = run_suite(suite)
    for result in results:
        click.echo(f"{result.experiment_id}: {'pass' if result.passed else 'FAIL'} "
                   f'({len(result.verdicts)} checks, {len(result.violations)} failed)')
    failed = [result.experiment_id for result in results if not result.passed]
    if failed:
        raise BoundViolation(f"suite '{suite}' failed in {', '.join(failed)}")


@main.command()
@click.argument('run_dir', type=click.Path())
@click.option('-o', '--output', 'output', type=click.Path(), default=None, help='CSV file; stdout when omitted')
@_exit_codes
def report(run_dir, output):
    """Per-grid CSV of a finished run, for plotting."""
    text = do_report(run_dir)
    if output is None:
        click.echo(text, nl=False)
    else:
        with open(output, 'w', encoding='utf-8') as f:
            f.write(text)
        logger.info(f'records written to {output}')


if __name__ == '__main__':
    main()
