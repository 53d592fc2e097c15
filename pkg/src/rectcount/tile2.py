"""Exact counts for the 2 x n rectangle.

A multiset M of one-row blocks 1 x k tiles the 2 x n strip iff

* some sub-multiset of M sums to n (both rows filled horizontally), or
* M holds a 1 x 2 block and M minus that block has a sub-multiset
  summing to n - 1 (one domino stands vertically).

Two vertical dominoes can always be laid flat as a stacked pair, so more
than one upright domino never adds anything new.

The fast counter never materializes partitions of 2n. It enumerates the
multisets of parts >= 3, remembers for each only its total t and
g = t - b*, where b* is the largest subsum <= t/2, and fills in the 1s
and 2s analytically: with r = 2n - t cells left for them, the multiset
tiles iff n >= g, independently of how r splits into 1s and 2s.
"""
from __future__ import annotations

import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Sequence

from .partcore import (
    Partition,
    euler_p,
    euler_p_table,
    nuclear_q,
    partitions_iter,
    two_colored_q2_table,
)

log = logging.getLogger(__name__)

__all__ = [
    "Tile2Config",
    "SubsumProfile",
    "subsum_bits",
    "tileable",
    "one_row_table",
    "p_tilde",
    "p_tilde_table",
    "p_tilde_filter",
    "p_tilde_pairs",
    "p_tilde_subsum_only",
    "r_no_subsum",
    "p2",
    "p2_table",
    "s_count",
    "s_count_table",
    "s_recurrence_table",
    "t_count",
    "t_count_table",
    "BoundCheck",
    "BoundReport",
    "verify_bounds",
]


@dataclass(frozen=True)
class Tile2Config:
    """Strip length plus an optional whitelist of one-row block lengths."""

    n: int
    allowed_parts: frozenset[int] | None = None

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("n must be >= 0")
        if self.allowed_parts is not None:
            parts = frozenset(self.allowed_parts)
            if not parts or min(parts) < 1:
                raise ValueError("allowed_parts must be a nonempty set of positive ints")
            object.__setattr__(self, "allowed_parts", parts)

    def parts(self) -> list[int]:
        top = 2 * self.n
        if self.allowed_parts is None:
            return list(range(top, 0, -1))
        return sorted((p for p in self.allowed_parts if p <= top), reverse=True)


def subsum_bits(parts: Iterable[int]) -> int:
    """Bit s is set iff some sub-multiset of ``parts`` sums to s."""
    bits = 1
    for p in parts:
        bits |= bits << p
    return bits


@dataclass(frozen=True)
class SubsumProfile:
    partition: Partition
    achievable: int = field(default=-1)

    def __post_init__(self):
        if not isinstance(self.partition, Partition):
            object.__setattr__(self, "partition", Partition(tuple(self.partition)))
        if self.achievable < 0:
            object.__setattr__(self, "achievable", subsum_bits(self.partition.parts))

    @property
    def total(self) -> int:
        return self.partition.total

    def has(self, s: int) -> bool:
        return s >= 0 and (self.achievable >> s) & 1 == 1

    def sums(self) -> list[int]:
        return [s for s in range(self.total + 1) if self.has(s)]

    def is_symmetric(self) -> bool:
        return all(self.has(self.total - s) for s in self.sums())


def tileable(parts: Sequence[int], n: int, domino: bool = True) -> bool:
    """Whether the one-row blocks ``parts`` tile the 2 x n strip."""
    if sum(parts) != 2 * n:
        return False
    if (subsum_bits(parts) >> n) & 1:
        return True
    if domino and n >= 1 and 2 in parts:
        rest = list(parts)
        rest.remove(2)
        return bool((subsum_bits(rest) >> (n - 1)) & 1)
    return False


# --------------------------------------------------------------------------
# fast histogram counter
# --------------------------------------------------------------------------

MERGE_MAX_PARTS = 12


def _histogram_worker(big_parts: tuple[int, ...], limit: int, roots: tuple[int, ...] | None):
    """Count multisets of ``big_parts`` (all >= 3) by (total, g).

    Every multiset with total <= limit is visited once; ``roots`` restricts
    the largest part (None = no restriction, and the empty multiset is
    included).
    """
    hist: Counter = Counter()
    masks = [(1 << (t // 2 + 1)) - 1 for t in range(limit + 1)]
    width = limit + 1
    values = sorted(big_parts, reverse=True)

    def visit(idx, t, bits):
        hist[t * width + t - (bits & masks[t]).bit_length() + 1] += 1
        for j in range(idx, len(values)):
            v = values[j]
            tt, bb = t, bits
            while tt + v <= limit:
                tt += v
                bb |= bb << v
                visit(j + 1, tt, bb)

    if roots is None:
        visit(0, 0, 1)
    else:
        for v in roots:
            j = values.index(v)
            tt, bb = 0, 1
            while tt + v <= limit:
                tt += v
                bb |= bb << v
                visit(j + 1, tt, bb)
    return hist


def _histogram_merged(values: tuple[int, ...], limit: int) -> Counter:
    """Same histogram, by a DP over (total, low half of subsum bitset).

    Multisets sharing a state are merged, which collapses the work
    enormously when only a few part sizes are allowed. Bits above
    limit/2 can never become the best half-sum, so they are dropped.
    """
    mask = (1 << (limit // 2 + 1)) - 1
    states: Counter = Counter({(0, 1): 1})
    for v in values:
        nxt: Counter = Counter()
        for (t, bits), c in states.items():
            while True:
                nxt[(t, bits)] += c
                t += v
                if t > limit:
                    break
                bits = (bits | (bits << v)) & mask
        states = nxt
    width = limit + 1
    hist: Counter = Counter()
    for (t, bits), c in states.items():
        hist[t * width + t - (bits & ((1 << (t // 2 + 1)) - 1)).bit_length() + 1] += c
    return hist


def _histogram(big_parts: Sequence[int], limit: int, jobs: int = 1) -> Counter:
    values = tuple(sorted({v for v in big_parts if 3 <= v <= limit}, reverse=True))
    if len(values) <= MERGE_MAX_PARTS:
        return _histogram_merged(values[::-1], limit)
    if jobs <= 1:
        return _histogram_worker(values, limit, None)
    # round-robin largest parts across workers; the empty multiset once
    chunks = [values[i::jobs] for i in range(jobs)]
    hist: Counter = Counter({0: 1})
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for part in pool.map(_histogram_worker, [values] * len(chunks), [limit] * len(chunks), chunks):
            hist.update(part)
    return hist


def one_row_table(n_max: int, allowed: Iterable[int] | None = None, jobs: int = 1) -> list[int]:
    """[c(0), ..., c(n_max)], c(n) = # multisets of allowed 1 x k blocks tiling 2 x n.

    ``allowed=None`` means every length. Requires 1 to be allowed for the
    fast path; other sets fall back to the streaming filter.
    """
    parts = None if allowed is None else sorted(set(allowed))
    if parts is not None and 1 not in parts:
        return [p_tilde_filter(n, parts) for n in range(n_max + 1)]
    limit = 2 * n_max
    big = range(3, limit + 1) if parts is None else [p for p in parts if p >= 3]
    with_two = parts is None or 2 in parts
    hist = _histogram(big, limit, jobs)
    width = limit + 1
    # g >= t/2 always, so n >= g already forces t <= 2n; the 1s/2s weight
    # n + 1 - ceil(t/2) then splits into two prefix sums over g
    count_at = [0] * (n_max + 1)
    half_at = [0] * (n_max + 1)
    for key, c in hist.items():
        t, g = divmod(key, width)
        if g <= n_max:
            count_at[g] += c
            half_at[g] += c * ((t + 1) // 2)
    out = []
    count = half = 0
    for n in range(n_max + 1):
        count += count_at[n]
        half += half_at[n]
        out.append((n + 1) * count - half if with_two else count)
    return out


_p_tilde_cache: list[int] = [1]


def p_tilde_table(n_max: int, jobs: int = 1) -> list[int]:
    """[p~(2,0), ..., p~(2,n_max)]: tilings of 2 x n by 1 x k blocks only."""
    global _p_tilde_cache
    if len(_p_tilde_cache) <= n_max:
        _p_tilde_cache = one_row_table(n_max, None, jobs)
    return _p_tilde_cache[: n_max + 1]


def p_tilde(n: int) -> int:
    if n < 0:
        return 0
    return p_tilde_table(n)[n]


def p_tilde_filter(n: int, allowed: Iterable[int] | None = None) -> int:
    """p~(2,n) by streaming partitions of 2n through :func:`tileable`."""
    parts = None if allowed is None else set(allowed)
    domino = parts is None or 2 in parts
    count = 0
    for lam in partitions_iter(2 * n, 2 * n if 2 * n else 1):
        if parts is not None and not parts.issuperset(lam):
            continue
        if tileable(lam, n, domino):
            count += 1
    return count


def p_tilde_pairs(n: int) -> int:
    """p~(2,n) by unioning row contents and deduplicating multisets.

    Rows are a pair of partitions of n, or (with one upright domino) a
    pair of partitions of n - 1 plus the domino.
    """
    seen = set()
    rows = list(partitions_iter(n, max(n, 1)))
    for i, a in enumerate(rows):
        for b in rows[i:]:
            seen.add(tuple(sorted(a + b, reverse=True)))
    if n >= 1:
        rows = list(partitions_iter(n - 1, max(n - 1, 1)))
        for i, a in enumerate(rows):
            for b in rows[i:]:
                seen.add(tuple(sorted(a + b + (2,), reverse=True)))
    return len(seen)


def p_tilde_subsum_only(n: int) -> int:
    """Partitions of 2n having a subsum n: p(2n) - R(2n, n).

    This is the lower end of the sandwich and ignores upright dominoes;
    p~(2,n) minus this value counts the multisets that need one.
    """
    return euler_p(2 * n) - r_no_subsum(2 * n, n)


def r_no_subsum(total: int, target: int) -> int:
    """R(total, target): partitions of ``total`` with no subsum equal to ``target``."""
    if not 0 <= target <= total:
        raise ValueError("need 0 <= target <= total")
    count = 0
    # parts >= 2 are enumerated; c1 = total - t ones then cover the window
    # [target - c1, target] of subsums
    def visit(cap, t, bits):
        nonlocal count
        c1 = total - t
        lo = max(target - c1, 0)
        window = ((1 << (target + 1)) - 1) ^ ((1 << lo) - 1)
        if not bits & window:
            count += 1
        for v in range(min(cap, total - t), 1, -1):
            nb = bits | (bits << v)
            if (nb >> target) & 1:
                continue
            visit(v, t + v, nb)

    visit(total, 0, 1)
    return count


# --------------------------------------------------------------------------
# p(2, n)
# --------------------------------------------------------------------------

def p2_table(n_max: int, jobs: int = 1) -> list[int]:
    """[p(2,0), ..., p(2,n_max)] via sum_i q(i) p~(2, n-i)."""
    pt = p_tilde_table(n_max, jobs)
    q = [nuclear_q(i) for i in range(n_max + 1)]
    return [sum(q[i] * pt[n - i] for i in range(n + 1)) for n in range(n_max + 1)]


def p2(n: int) -> int:
    if n < 0:
        return 0
    return p2_table(n)[n]


# --------------------------------------------------------------------------
# symmetric arrangements
# --------------------------------------------------------------------------

def _q2(n_max: int) -> list[int]:
    return two_colored_q2_table(n_max)


def s_count_table(n_max: int) -> list[int]:
    """Coefficients of P(x)^2 (1 - x)(1 - x^2)."""
    q = _q2(n_max)
    at = lambda m: q[m] if m >= 0 else 0
    return [at(n) - at(n - 1) - at(n - 2) + at(n - 3) for n in range(n_max + 1)]


def s_count(n: int) -> int:
    return s_count_table(n)[n] if n >= 0 else 0


def t_count_table(n_max: int) -> list[int]:
    """Coefficients of P(x)^2 (1 - x^2)."""
    q = _q2(n_max)
    return [q[n] - (q[n - 2] if n >= 2 else 0) for n in range(n_max + 1)]


def t_count(n: int) -> int:
    """T(n) as a single value; O(n) once p(n) is cached."""
    if n < 0:
        return 0
    p = euler_p_table(n)
    q = lambda m: sum(p[k] * p[m - k] for k in range(m + 1)) if m >= 0 else 0
    return q(n) - q(n - 2)


def s_recurrence_table(n_max: int) -> list[int]:
    """S(n) from the weighted (logarithmic-derivative) recurrence.

    n S(n) = -sum_{k=1}^{n} S(n-k) - sum_{k=1}^{n//2} 2 S(n-2k)
             + 2 sum_{v=1}^{n} sum_{k=1}^{n//v} v S(n-kv)

    Raises ArithmeticError if the right-hand side is not divisible by n,
    which would mean the printed recurrence is wrong.
    """
    s = [1]
    for n in range(1, n_max + 1):
        rhs = -sum(s[n - k] for k in range(1, n + 1))
        rhs -= sum(2 * s[n - 2 * k] for k in range(1, n // 2 + 1))
        rhs += 2 * sum(v * s[n - k * v] for v in range(1, n + 1) for k in range(1, n // v + 1))
        value, rem = divmod(rhs, n)
        if rem:
            raise ArithmeticError(f"recurrence not integral at n={n}")
        s.append(value)
    return s


# --------------------------------------------------------------------------
# bounds
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class BoundCheck:
    name: str
    lhs: int
    rhs: int
    holds: bool

    @property
    def slack(self) -> int:
        return abs(self.rhs - self.lhs)


@dataclass(frozen=True)
class BoundReport:
    n: int
    p2: int
    checks: tuple[BoundCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.holds for c in self.checks)


def verify_bounds(n: int, table: Sequence[int] | None = None) -> BoundReport:
    """Evaluate the elementary lower/upper bounds for p(2,n) exactly."""
    if n < 1:
        raise ValueError("bounds are stated for n >= 1")
    if table is None or len(table) <= n:
        table = p2_table(n)
    p = euler_p_table(n)
    value, prev = table[n], table[n - 1]

    lower = p[n] + sum(p[1 : n + 1])
    upper_pairs = sum(comb(p[n - i] + 1, 2) * p[i] for i in range(n + 1))
    step = prev + 2 * p[n] - p[n - 1]
    upper_domino = p[n] ** 2 + sum((p[i] + p[i - 1]) * p[n - i] ** 2 for i in range(1, n + 1))
    checks = (
        BoundCheck("lower_sum", lower, value, lower <= value),
        BoundCheck("upper_pairs", value, upper_pairs, value <= upper_pairs),
        BoundCheck("step_lower", step, value, step <= value),
        BoundCheck("upper_domino", value, upper_domino, value <= upper_domino),
    )
    return BoundReport(n, value, checks)
