"""Order-preserving map over an optional process pool.

``WALG_THREADS`` caps the number of workers; unset or 1 means serial.
Results are always merged in input order, so output never depends on it.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable


def worker_count() -> int:
    raw = os.environ.get("WALG_THREADS", "1")
    try:
        n = int(raw)
    except ValueError:
        n = 1
    return max(1, n)


def pmap(fn: Callable, items: Iterable) -> list:
    items = list(items)
    n = min(worker_count(), len(items))
    if n <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=n) as pool:
        return list(pool.map(fn, items))
