'''Order-preserving map over independent work items.

The worker count comes from ``config['threads']`` (``PENNING_THREADS``).
With one worker the map runs in-process; otherwise a process pool is used,
so *func* must be a picklable module-level callable (or a
:func:`functools.partial` of one).
'''
from __future__ import annotations

from multiprocessing import Pool
from typing import Any, Callable, Iterable, TypeVar

from penning.config import threads
from penning.logger import Logger

__all__ = ['parallel_map']

T = TypeVar('T')
R = TypeVar('R')

# smaller batches run in-process
_MIN_PARALLEL_ITEMS = 64


def parallel_map(func: Callable[[T], R], items: Iterable[T], config: dict[str, Any] | None = None) -> list[R]:
    items = list(items)
    workers = min(threads(config), len(items))
    if workers <= 1 or len(items) < _MIN_PARALLEL_ITEMS:
        return [func(item) for item in items]
    Logger.debug(f'parallel_map: {len(items)} items on {workers} workers')
    chunk = max(1, len(items) // (workers * 4))
    with Pool(workers) as pool:
        return pool.map(func, items, chunksize=chunk)
