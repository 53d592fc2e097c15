"""Restricted counts p_{k,l}(2,n): one-row blocks 1 x i (i <= k) and
two-row blocks 2 x j (2 <= j <= l)."""
from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .partcore import p_max_part_table, p_multiset_table
from .tile2 import one_row_table

__all__ = [
    "RestrictSpec",
    "p_k1",
    "p_k1_table",
    "p_kl",
    "p_kl_table",
    "p_kl_convolution",
    "closed_form_table1",
    "p_two_parts",
    "GrowthReport",
    "growth_diagnostic",
    "leading_coefficient",
]


@dataclass(frozen=True)
class RestrictSpec:
    k: int
    l: int
    n: int = 0

    def __post_init__(self):
        if self.k < 1 or self.l < 1 or self.n < 0:
            raise ValueError(f"need k >= 1, l >= 1, n >= 0; got {self}")


_lock = threading.Lock()
_k1: dict[int, list[int]] = {}
_kl: dict[tuple[int, int], list[int]] = {}


def p_k1_table(k: int, n_max: int, jobs: int = 1) -> list[int]:
    """[p_{k,1}(2,0), ..., p_{k,1}(2,n_max)]."""
    RestrictSpec(k, 1, n_max)
    table = _k1.get(k)
    if table is None or len(table) <= n_max:
        with _lock:
            table = _k1.get(k)
            if table is None or len(table) <= n_max:
                table = one_row_table(n_max, range(1, k + 1), jobs)
                _k1[k] = table
    return table[: n_max + 1]


def p_k1(k: int, n: int) -> int:
    if n < 0:
        return 0
    return p_k1_table(k, n)[n]


def p_kl_table(k: int, l: int, n_max: int, jobs: int = 1) -> list[int]:
    """Rows built with p_{k,l}(n) = p_{k,l}(n - l) + p_{k,l-1}(n), from l = 1 up."""
    RestrictSpec(k, l, n_max)
    if l == 1:
        return p_k1_table(k, n_max, jobs)
    cached = _kl.get((k, l))
    if cached is not None and len(cached) > n_max:
        return cached[: n_max + 1]
    below = p_kl_table(k, l - 1, n_max, jobs)
    row = list(below)
    for n in range(l, n_max + 1):
        row[n] += row[n - l]
    _kl[(k, l)] = row
    return list(row)


def p_kl(k: int, l: int, n: int) -> int:
    if n < 0:
        return 0
    return p_kl_table(k, l, n)[n]


def p_kl_convolution(k: int, l: int, n: int) -> int:
    """sum_i p_B(i) p_{k,1}(2, n-i) with B = {2, ..., l}."""
    if l < 2:
        raise ValueError("the convolution form needs l >= 2")
    two_row = p_multiset_table(n, range(2, l + 1))
    one_row = p_k1_table(k, n)
    return sum(two_row[i] * one_row[n - i] for i in range(n + 1))


# --------------------------------------------------------------------------
# closed forms for 1 <= k, l <= 3
# --------------------------------------------------------------------------

F = Fraction

# residue tables for the correction terms; values indexed by n mod period
_CORRECTION = {
    (1, 1): (1, [F(0)]),
    (2, 1): (1, [F(0)]),
    (1, 2): (2, [F(1), F(1, 2)]),
    (1, 3): (6, [F(1), F(5, 12), F(2, 3), F(3, 4), F(2, 3), F(5, 12)]),
    (2, 2): (2, [F(1), F(3, 4)]),
    (2, 3): (6, [F(1), F(55, 72), F(7, 9), F(7, 8), F(8, 9), F(47, 72)]),
    (3, 1): (3, [F(1), F(2, 3), F(-1, 3)]),
    (3, 2): (6, [F(1), F(25, 36), F(2, 9), F(5, 4), F(4, 9), F(17, 36)]),
}

# the (3,3) correction is affine in n: (slope, intercept) per residue mod 6
_CORRECTION_33 = [
    (F(1), F(1)),
    (F(22, 27), F(155, 216)),
    (F(20, 27), F(8, 27)),
    (F(1), F(9, 8)),
    (F(22, 27), F(16, 27)),
    (F(20, 27), F(91, 216)),
]

# polynomial parts, coefficients from the constant term up
_POLY = {
    (1, 1): [F(1)],
    (1, 2): [F(0), F(1, 2)],
    (1, 3): [F(0), F(1, 2), F(1, 12)],
    (2, 1): [F(1), F(1)],
    (2, 2): [F(0), F(1), F(1, 4)],
    (2, 3): [F(0), F(11, 12), F(7, 24), F(1, 36)],
    (3, 1): [F(0), F(1), F(1, 3)],
    (3, 2): [F(0), F(5, 6), F(5, 12), F(1, 18)],
    (3, 3): [F(0), F(0), F(7, 18), F(2, 27), F(1, 216)],
}


def closed_form_table1(k: int, l: int, n: int) -> int:
    """Quasi-polynomial formula for p_{k,l}(2,n), 1 <= k, l <= 3, n >= 1."""
    if (k, l) not in _POLY:
        raise ValueError(f"no closed form for (k, l) = ({k}, {l})")
    if n < 1:
        raise ValueError("closed forms are stated for n >= 1")
    value = sum(c * n**e for e, c in enumerate(_POLY[(k, l)]))
    if (k, l) == (3, 3):
        slope, intercept = _CORRECTION_33[n % 6]
        value += slope * n + intercept
    else:
        period, residues = _CORRECTION[(k, l)]
        value += residues[n % period]
    if value.denominator != 1:
        raise ArithmeticError(f"closed form for ({k},{l}) not integral at n={n}: {value}")
    return int(value)


def p_two_parts(m: int, n: int) -> int:
    """Blocks 1 x 1 and 1 x m only (m >= 3): 2 floor(n/m) + 1."""
    if m < 3:
        raise ValueError("m must be >= 3")
    if n < 0:
        return 0
    return 2 * (n // m) + 1


# --------------------------------------------------------------------------
# growth
# --------------------------------------------------------------------------

def leading_coefficient(k: int, l: int) -> Fraction:
    """2^(k-1) / (l! k! (k+l-2)!)."""
    return Fraction(2 ** (k - 1), factorial(l) * factorial(k) * factorial(k + l - 2))


@dataclass(frozen=True)
class GrowthReport:
    k: int
    l: int
    ns: tuple[int, ...]
    ratios: tuple[float, ...]

    def ratio_at(self, n: int) -> float:
        return self.ratios[self.ns.index(n)]

    @property
    def converging(self) -> bool:
        end = abs(self.ratios[-1] - 1)
        mid = abs(self.ratio_at(self.ns[-1] // 2) - 1)
        return end < mid or end == 0

    @property
    def bracketed(self) -> bool:
        return 0.5 <= self.ratios[-1] <= 2.0

    @property
    def ok(self) -> bool:
        return self.converging and self.bracketed


def growth_diagnostic(k: int, l: int, n_max: int) -> GrowthReport:
    """p_{k,l}(2,n) divided by its leading term, for n = 1..n_max."""
    if n_max < 10:
        raise ValueError("n_max must be >= 10")
    table = p_kl_table(k, l, n_max)
    lead = leading_coefficient(k, l)
    d = k + l - 2
    ns = tuple(range(1, n_max + 1))
    ratios = tuple(float(Fraction(table[n]) / (lead * n**d)) for n in ns)
    return GrowthReport(k, l, ns, ratios)


def p_1l_table(l: int, n_max: int) -> list[int]:
    """p_{1,l}(2,n) = p_l(n), the parts-at-most-l count."""
    return p_max_part_table(n_max, l)
