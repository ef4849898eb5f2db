"""Order-preserving parallel map capped by PROTRUSION_LAB_THREADS."""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, TypeVar

T = TypeVar("T")
R = TypeVar("R")


def worker_cap() -> int:
    raw = os.environ.get("PROTRUSION_LAB_THREADS")
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            pass
    return os.cpu_count() or 1


def parallel_map(func: Callable[[T], R], items: Iterable[T], min_items: int = 8) -> list[R]:
    """``[func(x) for x in items]``, spread over worker processes when useful.

    ``func`` must be a picklable module-level function. Results come back in
    input order regardless of completion order.
    """
    items = list(items)
    workers = min(worker_cap(), len(items))
    if workers <= 1 or len(items) < min_items:
        return [func(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, items, chunksize=max(1, len(items) // (4 * workers))))
