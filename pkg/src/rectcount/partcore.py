"""Exact classical partition counts shared by every other module.

All counts are plain Python ints. Tables are grown on demand and cached
per process; readers never see a partially built table because a list is
only swapped in after it is complete.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Partition",
    "SeqTable",
    "euler_p",
    "euler_p_table",
    "nuclear_q",
    "p_max_part",
    "p_max_part_table",
    "p_multiset",
    "p_multiset_table",
    "two_colored_q2",
    "two_colored_q2_table",
    "partitions_iter",
    "convolve",
]


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing tuple of positive parts."""

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(self.parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def total(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)


@dataclass(frozen=True)
class SeqTable:
    """An immutable run of exact values indexed from n = 0."""

    name: str
    args: dict = field(default_factory=dict)
    values: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))
        object.__setattr__(self, "args", dict(self.args))

    def __len__(self):
        return len(self.values)

    def __getitem__(self, n):
        return self.values[n]

    @property
    def key(self) -> tuple:
        return (self.name, tuple(sorted((k, str(v)) for k, v in self.args.items())))


# --------------------------------------------------------------------------
# Euler's p(n)
# --------------------------------------------------------------------------

_lock = threading.Lock()
_p_table: list[int] = [1]


def _pentagonal_offsets(limit: int) -> tuple[list[int], list[int]]:
    """Generalized pentagonal numbers <= limit, split by the sign they carry."""
    plus, minus = [], []
    k = 1
    while True:
        a = k * (3 * k - 1) // 2
        if a > limit:
            break
        b = k * (3 * k + 1) // 2
        bucket = plus if k % 2 else minus
        bucket.append(a)
        if b <= limit:
            bucket.append(b)
        k += 1
    return plus, minus


def euler_p_table(n_max: int) -> list[int]:
    """Return [p(0), ..., p(n_max)]."""
    global _p_table
    table = _p_table
    if len(table) > n_max:
        return table[: n_max + 1]
    with _lock:
        table = _p_table
        if len(table) > n_max:
            return table[: n_max + 1]
        new = list(table)
        plus, minus = _pentagonal_offsets(n_max)
        for n in range(len(new), n_max + 1):
            s = 0
            for a in plus:
                if a > n:
                    break
                s += new[n - a]
            for a in minus:
                if a > n:
                    break
                s -= new[n - a]
            new.append(s)
        _p_table = new
        return new[: n_max + 1]


def euler_p(n: int) -> int:
    """Number of partitions of n. p(n) = 0 for n < 0."""
    if n < 0:
        return 0
    if len(_p_table) <= n:
        euler_p_table(n)
    return _p_table[n]


def nuclear_q(n: int) -> int:
    """Partitions of n with no part equal to 1, i.e. p(n) - p(n-1)."""
    if n < 0:
        return 0
    return euler_p(n) - euler_p(n - 1)


# --------------------------------------------------------------------------
# Restricted counts
# --------------------------------------------------------------------------

def p_multiset_table(n_max: int, parts: Iterable[int]) -> list[int]:
    """Coefficients of prod_{a in parts} 1/(1 - x^a) up to x^n_max.

    ``parts`` is a multiset: a value listed twice is two distinct generators.
    """
    table = [1] + [0] * n_max
    for a in parts:
        if a <= 0:
            raise ValueError(f"parts must be positive, got {a}")
        for j in range(a, n_max + 1):
            table[j] += table[j - a]
    return table


def p_multiset(n: int, parts: Iterable[int]) -> int:
    """The A-partition function p_A(n)."""
    if n < 0:
        return 0
    return p_multiset_table(n, parts)[n]


def p_max_part_table(n_max: int, l: int) -> list[int]:
    if l < 1:
        raise ValueError("l must be >= 1")
    return p_multiset_table(n_max, range(1, min(l, max(n_max, 1)) + 1))


def p_max_part(n: int, l: int) -> int:
    """Partitions of n into parts <= l."""
    if n < 0:
        return 0
    return p_max_part_table(n, l)[n]


# --------------------------------------------------------------------------
# Two-coloured partitions
# --------------------------------------------------------------------------

def convolve(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Cauchy product truncated to the shorter input."""
    size = min(len(a), len(b))
    return [sum(a[k] * b[n - k] for k in range(n + 1)) for n in range(size)]


def two_colored_q2_table(n_max: int, method: str = "convolution") -> list[int]:
    """[q2(0), ..., q2(n_max)], the coefficients of P(x)^2.

    ``method="product"`` expands prod 1/(1-x^k)^2 directly and never touches
    the p(n) table, so the two methods check each other.
    """
    if method == "convolution":
        p = euler_p_table(n_max)[: n_max + 1]
        return convolve(p, p)
    if method == "product":
        table = [1] + [0] * n_max
        for k in range(1, n_max + 1):
            for _ in range(2):
                for j in range(k, n_max + 1):
                    table[j] += table[j - k]
        return table
    raise ValueError(f"unknown method {method!r}")


def two_colored_q2(n: int) -> int:
    """Number of 2-coloured partitions of n (single value, O(n) work)."""
    if n < 0:
        return 0
    p = euler_p_table(n)
    return sum(p[k] * p[n - k] for k in range(n + 1))


# --------------------------------------------------------------------------
# Enumeration
# --------------------------------------------------------------------------

def partitions_iter(total: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """Yield each partition of ``total`` with parts <= max_part.

    Partitions come as weakly decreasing tuples in reverse-lexicographic
    order, e.g. (4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1).
    """
    if max_part is None:
        max_part = total
    if total < 0 or max_part < 1 and total > 0:
        return
    prefix: list[int] = []

    def rec(remaining, cap):
        if remaining == 0:
            yield tuple(prefix)
            return
        for part in range(min(cap, remaining), 0, -1):
            prefix.append(part)
            yield from rec(remaining - part, part)
            prefix.pop()

    yield from rec(total, max_part)
