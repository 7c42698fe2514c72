from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Sequence, TypeVar

T = TypeVar("T")

ENV_WORKERS = "WORKBENCH_WORKERS"


def resolve_workers(requested: int | None) -> int:
    """Environment override first, then the explicit request, then CPU count."""
    env = os.environ.get(ENV_WORKERS)
    if env:
        try:
            value = int(env)
        except ValueError:
            raise ValueError(f"{ENV_WORKERS}={env!r} is not an integer") from None
        return max(1, value)
    if requested is not None:
        return max(1, requested)
    return os.cpu_count() or 1


def map_by_n(fn: Callable[[int], T], ns: Sequence[int], workers: int = 1) -> list[T]:
    """``[fn(n) for n in ns]``, optionally sharded over processes; order is kept."""
    if workers <= 1 or len(ns) < 2:
        return [fn(n) for n in ns]
    # largest n first keeps the pool busy; results are re-ordered below
    order = sorted(range(len(ns)), key=lambda i: -ns[i])
    with ProcessPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(fn, [ns[i] for i in order]))
    out: list = [None] * len(ns)
    for i, r in zip(order, results):
        out[i] = r
    return out
