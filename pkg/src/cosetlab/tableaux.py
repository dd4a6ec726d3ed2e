"""Partition and standard-tableau combinatorics behind the S_n characters.

Partitions are plain descending tuples of positive integers.  Characters are
exact integers computed by the Murnaghan-Nakayama recursion in beta-set
(first-column hook length) form; dimensions come from the hook-length formula
and are cross-checked against brute tableau counts in the tests.
"""

from __future__ import annotations

import math
from functools import cache

Partition = tuple[int, ...]

MAX_PARTITION_N = 30


def check_partition(parts) -> Partition:
    lam = tuple(int(p) for p in parts)
    if any(p <= 0 for p in lam):
        raise ValueError(f"partition parts must be positive: {parts!r}")
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError(f"partition parts must be weakly decreasing: {parts!r}")
    return lam


def partition_str(lam: Partition) -> str:
    return "[" + ",".join(str(p) for p in lam) + "]"


def parse_partition(text: str) -> Partition:
    t = text.strip()
    if not (t.startswith("[") and t.endswith("]")):
        raise ValueError(f"expected a partition like [3,1], got {text!r}")
    inner = t[1:-1].strip()
    return check_partition(int(p) for p in inner.split(",")) if inner else ()


@cache
def partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of n in reverse-lexicographic order ([n] first)."""
    if not 0 <= n <= MAX_PARTITION_N:
        raise ValueError(f"n must be in [0, {MAX_PARTITION_N}], got {n}")
    out: list[Partition] = []

    def rec(remaining: int, maxpart: int, prefix: list[int]):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for p in range(min(maxpart, remaining), 0, -1):
            prefix.append(p)
            rec(remaining - p, p, prefix)
            prefix.pop()

    rec(n, n, [])
    return tuple(out)


def conjugate_partition(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def hook_lengths(lam: Partition) -> tuple[tuple[int, ...], ...]:
    conj = conjugate_partition(lam)
    return tuple(
        tuple(lam[i] - j + conj[j] - i - 1 for j in range(lam[i]))
        for i in range(len(lam))
    )


@cache
def dimension(lam: Partition) -> int:
    """Number of standard Young tableaux of shape lam (hook-length formula)."""
    lam = check_partition(lam)
    n = sum(lam)
    hooks = 1
    for row in hook_lengths(lam):
        for h in row:
            hooks *= h
    d, rem = divmod(math.factorial(n), hooks)
    assert rem == 0, "hook product must divide n!"
    return d


@cache
def standard_tableaux(lam: Partition) -> tuple[tuple[tuple[int, ...], ...], ...]:
    """All standard tableaux of shape lam, letters 0..n-1.

    Ordered lexicographically by the row-index vector of the letters: the
    tableau that keeps early letters in early rows comes first.  This order
    is load-bearing for the orthogonal matrix model and is pinned by tests.
    """
    lam = check_partition(lam)
    n = sum(lam)
    rows: list[list[int]] = [[] for _ in lam]
    out = []

    def place(letter: int):
        if letter == n:
            out.append(tuple(tuple(r) for r in rows))
            return
        for i in range(len(lam)):
            if len(rows[i]) < lam[i] and (i == 0 or len(rows[i - 1]) > len(rows[i])):
                rows[i].append(letter)
                place(letter + 1)
                rows[i].pop()

    place(0)
    return tuple(out)


def letter_positions(tableau) -> dict[int, tuple[int, int]]:
    return {
        letter: (i, j)
        for i, row in enumerate(tableau)
        for j, letter in enumerate(row)
    }


def _beta_set(lam: Partition) -> tuple[int, ...]:
    # Strictly decreasing first-column hook lengths: beta_i = lam_i + (l-1-i).
    l = len(lam)
    return tuple(lam[i] + (l - 1 - i) for i in range(l))


def _partition_from_beta(beta: list[int]) -> Partition:
    beta = sorted(beta, reverse=True)
    l = len(beta)
    lam = [beta[i] - (l - 1 - i) for i in range(l)]
    assert all(p >= 0 for p in lam)
    return tuple(p for p in lam if p > 0)


@cache
def _mn(lam: Partition, mu: Partition) -> int:
    if not mu:
        return 1 if not lam else 0
    t, rest = mu[0], mu[1:]
    beta = _beta_set(lam)
    beta_set = set(beta)
    total = 0
    for b in beta:
        if b < t or (b - t) in beta_set:
            continue
        # Removing a length-t border strip = lowering one beta number by t;
        # the strip height is the number of beta values jumped over.
        height = sum(1 for c in beta if b - t < c < b)
        new_beta = [c for c in beta if c != b] + [b - t]
        total += (-1) ** height * _mn(_partition_from_beta(new_beta), rest)
    return total


def character_sn(lam: Partition, cycle_type: Partition) -> int:
    """Exact integer character of the S_n irrep lam at a class cycle type."""
    lam = check_partition(lam)
    mu = tuple(sorted((int(c) for c in cycle_type), reverse=True))
    if any(c <= 0 for c in mu):
        raise ValueError(f"cycle type parts must be positive: {cycle_type!r}")
    if sum(lam) != sum(mu):
        raise ValueError(
            f"degree mismatch: |{partition_str(lam)}| = {sum(lam)} "
            f"but cycle type sums to {sum(mu)}"
        )
    return _mn(lam, mu)
