"""Deterministic evaluation helpers.

Parallel maps always hand results back in input order, and scalar
accumulations use compensated summation, so a computation produces the same
bytes whether it ran on one thread or many.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor


def ordered_map(fn, items, threads: int = 1) -> list:
    """Map fn over items, preserving input order in the result list."""
    items = list(items)
    if threads <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


def kahan_sum(values) -> float:
    """Compensated sequential sum; order-stable by construction."""
    total = 0.0
    carry = 0.0
    for v in values:
        y = float(v) - carry
        t = total + y
        carry = (t - total) - y
        total = t
    return total
