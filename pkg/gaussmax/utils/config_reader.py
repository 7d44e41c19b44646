# Copyright (c) gauss-maxima developers. All rights reserved.
import json
import os

from loguru import logger

from gaussmax.data.utils.exceptions import ConfigInvalid

DEFAULT_CONFIG_FILE_NAME = 'gauss-maxima.json'

DEFAULT_MASTER_SEED = 20130901
DEFAULT_WORKERS = 1
DEFAULT_BLOCK_SIZE = 10_000
DEFAULT_OUTPUT_DIR = './runs'
# log10 range and point count of the calibration grid
DEFAULT_CALIBRATION_GRID = (-3.0, 3.0, 121)


def get_config_file_name():
    return os.getenv('GAUSS_MAXIMA_TOOLS_CONFIG_JSON', DEFAULT_CONFIG_FILE_NAME)


def read_config():
    config_file_name = get_config_file_name()
    if os.path.isabs(config_file_name):
        config_file = config_file_name
    else:
        home_dir = os.path.expanduser('~')
        config_file = os.path.join(home_dir, config_file_name)

    if not os.path.exists(config_file):
        return None
    try:
        with open(config_file, 'r', encoding='utf-8') as f:
            config = json.load(f)
    except json.JSONDecodeError as e:
        raise ConfigInvalid(f'{config_file} is not valid JSON: {e}')
    return config


def _env_int(name):
    value = os.getenv(name)
    if value is None or value.strip() == '':
        return None
    try:
        return int(value, 0)
    except ValueError:
        raise ConfigInvalid(f'{name} must be an integer, got {value!r}')


def get_master_seed(master_seed=None):
    """The env override wins over the config document, which wins over the default."""
    seed_env = _env_int('GAUSS_MAXIMA_SEED')
    if seed_env is not None:
        return seed_env
    if master_seed is not None:
        return master_seed
    return DEFAULT_MASTER_SEED


def get_workers(workers=None):
    workers_env = _env_int('GAUSS_MAXIMA_WORKERS')
    if workers_env is not None:
        return workers_env
    if workers is not None:
        return workers
    config = read_config()
    if config is None:
        return DEFAULT_WORKERS
    return int(config.get('harness', {}).get('workers', DEFAULT_WORKERS))


def get_log_level():
    level = os.getenv('GAUSS_MAXIMA_LOG_LEVEL', 'INFO').upper()
    if level not in ('TRACE', 'DEBUG', 'INFO', 'SUCCESS', 'WARNING', 'ERROR', 'CRITICAL'):
        return 'INFO'
    return level


def get_block_size():
    config = read_config()
    if config is None:
        return DEFAULT_BLOCK_SIZE
    return int(config.get('harness', {}).get('block_size', DEFAULT_BLOCK_SIZE))


def get_output_dir():
    config = read_config()
    if config is None:
        return DEFAULT_OUTPUT_DIR
    return config.get('harness', {}).get('output_dir', DEFAULT_OUTPUT_DIR)


def get_default_constant(formula_id) -> float:
    """Default universal constant ``c`` for an abstract-constant formula."""
    formula_id = getattr(formula_id, 'value', formula_id)
    config = read_config()
    if config is None:
        return 1.0
    constants = config.get('constants', {})
    if formula_id not in constants:
        return 1.0
    value = float(constants[formula_id])
    if value <= 0:
        raise ConfigInvalid(f"constant for '{formula_id}' must be positive, got {value}")
    return value


def get_calibration_grid():
    config = read_config()
    if config is None:
        return DEFAULT_CALIBRATION_GRID
    grid = config.get('calibration', {}).get('grid')
    if grid is None:
        logger.debug(f"'calibration.grid' not found in {get_config_file_name()}, use default")
        return DEFAULT_CALIBRATION_GRID
    lo, hi, points = grid
    return float(lo), float(hi), int(points)
