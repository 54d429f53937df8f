"""Module to handle common tasks.

This module includes helpers shared by the computational modules: splitting an
integer range into chunks and running a worker over those chunks in a thread pool
while keeping the results in submission order.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import TYPE_CHECKING, TypeVar

from .config import MAX_WORKERS

if TYPE_CHECKING:
    from collections.abc import Callable, Sequence

T = TypeVar("T")
R = TypeVar("R")


def split_range(start: int, stop: int, chunk_size: int) -> list[tuple[int, int]]:
    """Split the half-open range [start, stop) into consecutive chunks."""
    return [
        (lower, min(lower + chunk_size, stop))
        for lower in range(start, stop, chunk_size)
    ]


def run_in_parallel(
    worker: Callable[[T], R],
    items: Sequence[T],
    max_workers: int = MAX_WORKERS,
    progress: Callable[[int, int], None] | None = None,
) -> list[R]:
    """Apply the worker to every item in parallel, keeping submission order."""
    total = len(items)
    results = []

    if max_workers <= 1 or total <= 1:
        for done, item in enumerate(items, start=1):
            results.append(worker(item))
            if progress is not None:
                progress(done, total)
        return results

    with ThreadPoolExecutor(max_workers=max_workers) as executor:
        for done, result in enumerate(executor.map(worker, items), start=1):
            results.append(result)
            if progress is not None:
                progress(done, total)

    return results
