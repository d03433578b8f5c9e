"""
Chunked exhaustive scans of S_n with optional worker processes.

A scan splits the rank interval [0, n!) into contiguous chunks, applies a
top-level chunk function to each, and hands the per-chunk results back for
an associative merge.  Chunk boundaries never depend on the worker count,
and callers merge with order-independent operations (sums, set unions
followed by sorting), so results are deterministic for any worker count.
"""

from __future__ import annotations

import multiprocessing
import os
from math import factorial
from typing import Callable, Sequence

__all__ = ["default_workers", "scan_sn", "map_chunks"]

WORKERS_ENV_VAR = "REVPASS_WORKERS"

# Below this many permutations a pool costs more than it saves.
_INLINE_THRESHOLD = 50_000

# Sweeps at least this big report chunk progress on stderr (that is, S_11).
_PROGRESS_THRESHOLD = 20_000_000


def default_workers() -> int:
    env = os.environ.get(WORKERS_ENV_VAR)
    if env:
        try:
            value = int(env)
        except ValueError:
            raise ValueError(
                f"{WORKERS_ENV_VAR} must be an integer, not {env!r}"
            ) from None
        if value >= 1:
            return value
    return os.cpu_count() or 1


def _run_tasks(
    fn: Callable,
    tasks: Sequence[tuple],
    workers: int,
    progress: Callable[[int, int], None] | None,
) -> list:
    if workers <= 1 or len(tasks) <= 1:
        results = []
        for i, task in enumerate(tasks):
            results.append(fn(*task))
            if progress is not None:
                progress(i + 1, len(tasks))
        return results
    results = []
    with multiprocessing.Pool(processes=min(workers, len(tasks))) as pool:
        for i, result in enumerate(
            pool.imap_unordered(_star(fn), tasks, chunksize=1)
        ):
            results.append(result)
            if progress is not None:
                progress(i + 1, len(tasks))
    return results


class _star:
    """Picklable adapter turning fn(*args) into fn(args) for imap."""

    def __init__(self, fn: Callable):
        self.fn = fn

    def __call__(self, args: tuple):
        return self.fn(*args)


def _stderr_progress(n: int) -> Callable[[int, int], None]:
    import sys

    def report(done: int, total: int) -> None:
        sys.stderr.write(f"revpass: S_{n} sweep {done}/{total} chunks\n")
        sys.stderr.flush()

    return report


def scan_sn(
    n: int,
    chunk_fn: Callable,
    extra_args: tuple = (),
    workers: int | None = None,
    progress: Callable[[int, int], None] | None = None,
) -> list:
    """
    Apply ``chunk_fn(n, start, stop, *extra_args)`` over a partition of S_n.

    ``chunk_fn`` must be a top-level function (it crosses process
    boundaries).  Returns the list of chunk results; merge order-independently.
    """
    total = factorial(n)
    if workers is None:
        workers = default_workers()
    if progress is None and total >= _PROGRESS_THRESHOLD:
        progress = _stderr_progress(n)
    if total <= _INLINE_THRESHOLD or workers <= 1:
        if workers <= 1 and total > _INLINE_THRESHOLD:
            num_chunks = min(16, total)
            bounds = [total * i // num_chunks for i in range(num_chunks + 1)]
            results = []
            for i in range(num_chunks):
                results.append(chunk_fn(n, bounds[i], bounds[i + 1], *extra_args))
                if progress is not None:
                    progress(i + 1, num_chunks)
            return results
        return [chunk_fn(n, 0, total, *extra_args)]
    num_chunks = min(workers * 4, total)
    bounds = [total * i // num_chunks for i in range(num_chunks + 1)]
    tasks = [
        (n, bounds[i], bounds[i + 1], *extra_args) for i in range(num_chunks)
    ]
    return _run_tasks(chunk_fn, tasks, workers, progress)


def map_chunks(
    fn: Callable,
    items: Sequence,
    extra_args: tuple = (),
    workers: int | None = None,
) -> list:
    """
    Apply ``fn(chunk, *extra_args)`` to slices of ``items``.

    Used by the frontier-based searches; chunk boundaries depend only on the
    item count.
    """
    if workers is None:
        workers = default_workers()
    if not items:
        return []
    if workers <= 1 or len(items) < 2_000:
        return [fn(items, *extra_args)]
    num_chunks = min(workers * 4, len(items))
    bounds = [len(items) * i // num_chunks for i in range(num_chunks + 1)]
    tasks = [
        (items[bounds[i] : bounds[i + 1]], *extra_args)
        for i in range(num_chunks)
    ]
    return _run_tasks(fn, tasks, workers, None)
