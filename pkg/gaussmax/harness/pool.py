# Copyright (c) gauss-maxima developers. All rights reserved.
"""Fixed-block task pool.

Work is cut into blocks whose sizes and seeds depend only on the config, never
on the worker count, and partial results are merged in sorted key order. Any
number of workers therefore produces the same statistics.
"""
import sys
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass
from functools import partial
from typing import Callable

import numpy as np
from loguru import logger
from tqdm import tqdm

from gaussmax.utils.hash_utils import derive_seed, hash64


@dataclass(frozen=True, order=True)
class TaskKey:
    grid_index: int
    stream: str
    block: int


def block_sizes(total: int, block_size: int) -> list[int]:
    full, rest = divmod(total, block_size)
    return [block_size] * full + ([rest] if rest else [])


def record_seed(master_seed: int, experiment_id: str, grid_index: int) -> int:
    """Seed that regenerates every draw of one grid point."""
    return derive_seed(master_seed, experiment_id, grid_index, 0)


def block_seed(seed: int, stream: str, block: int) -> int:
    return hash64(seed, stream, block)


def run_tasks(tasks: dict, workers: int, desc: str = 'tasks') -> dict:
    """Run zero-argument callables and return their results sorted by key."""
    results = {}
    if workers <= 1:
        for key, fn in tqdm(tasks.items(), total=len(tasks), desc=desc, disable=not sys.stderr.isatty()):
            results[key] = fn()
    else:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            futures = {executor.submit(fn): key for key, fn in tasks.items()}
            for future in tqdm(as_completed(futures), total=len(futures), desc=desc,
                               disable=not sys.stderr.isatty()):
                results[futures[future]] = future.result()
    return dict(sorted(results.items()))


class BlockPlan:
    """Collects block tasks per (grid point, stream) and merges them back in order.

    ``draw(seed, size)`` must build its own generator from ``seed``; tasks run
    concurrently and share nothing.
    """

    def __init__(self, master_seed: int, experiment_id: str, block_size: int):
        self.master_seed = master_seed
        self.experiment_id = experiment_id
        self.block_size = block_size
        self._tasks: dict[TaskKey, Callable] = {}

    def seed(self, grid_index: int) -> int:
        return record_seed(self.master_seed, self.experiment_id, grid_index)

    def add_draws(self, grid_index: int, stream: str, total: int, draw: Callable) -> None:
        seed = self.seed(grid_index)
        for block, size in enumerate(block_sizes(total, self.block_size)):
            self._tasks[TaskKey(grid_index, stream, block)] = partial(draw, block_seed(seed, stream, block), size)

    def add_task(self, grid_index: int, stream: str, block: int, fn: Callable) -> None:
        self._tasks[TaskKey(grid_index, stream, block)] = fn

    def __len__(self):
        return len(self._tasks)

    def run(self, workers: int, desc: str | None = None) -> dict[tuple[int, str], list]:
        logger.debug(f'{self.experiment_id}: {len(self._tasks)} tasks on {workers} workers')
        results = run_tasks(self._tasks, workers, desc or self.experiment_id)
        merged: dict[tuple[int, str], list] = {}
        for key, value in results.items():
            merged.setdefault((key.grid_index, key.stream), []).append(value)
        return merged

    @staticmethod
    def concat(parts: list) -> np.ndarray:
        return np.concatenate([np.atleast_1d(np.asarray(part, dtype=np.float64)) for part in parts])
