# Copyright (c) gauss-maxima developers. All rights reserved.
import json
import sys

import pytest
from click.testing import CliRunner
from loguru import logger

from gaussmax.cli.client import main
from gaussmax.cli.common import do_run
from gaussmax.data.data_reader_writer import DummyDataWriter
from gaussmax.harness.config import parse_config
from gaussmax.utils.enum_class import RunFile
from gaussmax.version import __version__


@pytest.fixture
def runner(monkeypatch):
    # keep log lines out of the captured output
    monkeypatch.setenv('GAUSS_MAXIMA_LOG_LEVEL', 'CRITICAL')
    yield CliRunner()
    logger.remove()
    logger.add(sys.stderr)


def _write_config(path, document):
    path.write_text(json.dumps(document), encoding='utf-8')
    return str(path)


def _stein_config(tmp_path, **parameters):
    return _write_config(tmp_path / 'stein.json', {
        'experiment_id': 'cli-stein', 'kind': 'stein',
        'parameters': {'p': 2, 'r': 5000, 'functions': ['identity'], **parameters}})


def test_version(runner):
    result = runner.invoke(main, ['--version'])
    assert result.exit_code == 0
    assert __version__ in result.output


def test_bound_with_inputs(runner):
    result = runner.invoke(main, ['bound', 'kolmogorov_shape', '-i', 'delta=0.001,p=100'])
    assert result.exit_code == 0
    report = json.loads(result.output)
    assert report['formula_id'] == 'kolmogorov_shape'
    assert report['constants'] == {'c': 1.0}
    assert report['value'] == pytest.approx(0.50986, abs=1e-4)


def test_bound_with_extra_options(runner):
    result = runner.invoke(main, ['bound', 'sudakov_fernique', '--delta', '0.01', '--p', '100'])
    assert result.exit_code == 0
    assert json.loads(result.output)['value'] == pytest.approx(0.60697, abs=1e-5)


def test_bound_missing_input_is_a_usage_error(runner):
    result = runner.invoke(main, ['bound', 'sudakov_fernique', '-i', 'delta=0.01'])
    assert result.exit_code == 2


def test_run_writes_the_run_directory(runner, tmp_path):
    config = _stein_config(tmp_path)
    out = tmp_path / 'runs'
    result = runner.invoke(main, ['run', config, '-o', str(out)])
    assert result.exit_code == 0
    assert 'cli-stein: pass' in result.output
    assert (out / 'cli-stein' / 'result.json').exists()
    assert (out / 'cli-stein' / 'records.csv').exists()

    again = runner.invoke(main, ['run', config, '-o', str(out)])
    assert again.exit_code == 2
    replaced = runner.invoke(main, ['run', config, '-o', str(out), '--overwrite', '-w', '2'])
    assert replaced.exit_code == 0


def test_run_violation_exits_1(runner, tmp_path):
    config = _stein_config(tmp_path, se_multiple=1e-9)
    result = runner.invoke(main, ['run', config, '--no-persist'])
    assert result.exit_code == 1
    assert 'FAIL' in result.output


def test_run_without_persist_keeps_files_in_memory(runner, tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    config = _stein_config(tmp_path)
    result = runner.invoke(main, ['run', config, '--no-persist'])
    assert result.exit_code == 0
    assert not (tmp_path / 'runs').exists()
    assert not (tmp_path / 'cli-stein').exists()

    memory = DummyDataWriter()
    run = do_run(parse_config(json.loads((tmp_path / 'stein.json').read_text(encoding='utf-8'))), writer=memory)
    assert memory.files[RunFile.RESULT] == run.to_json().encode('utf-8')
    assert {RunFile.CONFIG, RunFile.TIMING, RunFile.RECORDS} <= set(memory.files)
    assert RunFile.VIOLATIONS not in memory.files
    assert not (tmp_path / 'runs').exists()


def test_run_bad_config_exits_2(runner, tmp_path):
    config = _write_config(tmp_path / 'bad.json', {'experiment_id': 'bad', 'kind': 'comparison',
                                                   'parameters': {'r': 10}})
    assert runner.invoke(main, ['run', config, '--no-persist']).exit_code == 2
    assert runner.invoke(main, ['run', str(tmp_path / 'missing.json')]).exit_code == 2


def test_bootstrap_command(runner, tmp_path):
    data = tmp_path / 'z.csv'
    data.write_text('\n'.join(f'{(i % 7) - 3},{(i % 5) - 2},{(i % 3) - 1}' for i in range(40)) + '\n',
                    encoding='utf-8')
    out = tmp_path / 'boot'
    result = runner.invoke(main, ['bootstrap', str(data), '-r', '500', '-a', '0.05', '-a', '0.1', '-s', '3',
                                  '-o', str(out)])
    assert result.exit_code == 0
    summary = json.loads(result.output)
    assert summary['r'] == 500
    assert set(summary['quantiles']) == {'0.05', '0.1'}
    assert summary['quantiles']['0.05'] >= summary['quantiles']['0.1']
    assert summary['delta_hat'] is None
    assert (out / 'manifest.json').exists()


def test_bootstrap_missing_file_exits_2(runner, tmp_path):
    result = runner.invoke(main, ['bootstrap', str(tmp_path / 'none.csv'), '-r', '100'])
    assert result.exit_code == 2


def test_report(runner, tmp_path):
    out = tmp_path / 'runs'
    assert runner.invoke(main, ['run', _stein_config(tmp_path), '-o', str(out)]).exit_code == 0
    result = runner.invoke(main, ['report', str(out / 'cli-stein')])
    assert result.exit_code == 0
    assert result.output.startswith('grid_index,label,quantity')
    csv_path = tmp_path / 'records.csv'
    assert runner.invoke(main, ['report', str(out / 'cli-stein'), '-o', str(csv_path)]).exit_code == 0
    assert csv_path.read_text(encoding='utf-8') == result.output


def test_verify_smoothmax(runner):
    result = runner.invoke(main, ['verify', 'smoothmax'])
    assert result.exit_code == 0
    assert 'verify-smoothmax: pass' in result.output
    assert runner.invoke(main, ['verify', 'nonsense']).exit_code == 2
