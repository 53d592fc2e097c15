"""m-ary partitions and their 2 x n analogues b_{i,j}(2,n).

One-row blocks are 1 x m^t (t <= i), two-row blocks 2 x m^t (1 <= t <= j).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import prod

from .partcore import p_multiset_table
from .tile2 import one_row_table

__all__ = [
    "MarySpec",
    "BaseMDigits",
    "b_m",
    "b_m_table",
    "b_i0",
    "b_i0_table",
    "b_i0_enumerated",
    "b_ij",
    "b_ij_table",
    "b_ij_convolution",
    "b_full",
    "int_log",
    "digits_base",
    "congruence_predict",
    "CongruenceReport",
    "verify_congruences",
    "KINDS",
]

KINDS = ("alkauskas", "b_i0", "b_ij", "b_ij_empirical")


@dataclass(frozen=True)
class MarySpec:
    m: int
    i: int = 0
    j: int = 0

    def __post_init__(self):
        if self.m < 2 or self.i < 0 or self.j < 0:
            raise ValueError(f"need m >= 2 and i, j >= 0; got {self}")


@dataclass(frozen=True)
class BaseMDigits:
    """Base-m digits, least significant first; empty for n = 0."""

    m: int
    digits: tuple[int, ...]

    def __getitem__(self, idx: int) -> int:
        return self.digits[idx] if idx < len(self.digits) else 0

    def __len__(self):
        return len(self.digits)

    @property
    def value(self) -> int:
        return sum(c * self.m**e for e, c in enumerate(self.digits))


def digits_base(n: int, m: int) -> BaseMDigits:
    if n < 0 or m < 2:
        raise ValueError("need n >= 0, m >= 2")
    out = []
    while n:
        n, c = divmod(n, m)
        out.append(c)
    return BaseMDigits(m, tuple(out))


def int_log(n: int, m: int) -> int:
    """Largest e with m**e <= n (n >= 1)."""
    e, power = 0, m
    while power <= n:
        e += 1
        power *= m
    return e


# --------------------------------------------------------------------------
# b_m(n)
# --------------------------------------------------------------------------

_bm: dict[int, list[int]] = {}


def b_m_table(m: int, n_max: int) -> list[int]:
    """m-ary partition counts from b(n) = b(n-1) (m !| n), b(n-m) + b(n/m) (m | n)."""
    table = _bm.setdefault(m, [1])
    for n in range(len(table), n_max + 1):
        if n % m:
            table.append(table[n - 1])
        else:
            table.append(table[n - m] + table[n // m])
    return table[: n_max + 1]


def b_m(m: int, n: int) -> int:
    MarySpec(m)
    if n < 0:
        return 0
    return b_m_table(m, n)[n]


# --------------------------------------------------------------------------
# b_{i,0}(2, n)
# --------------------------------------------------------------------------

def b_i0_table(m: int, i: int, n_max: int) -> list[int]:
    """Rows via the m^i-block recurrence, from the closed forms at i = 0, 1."""
    MarySpec(m, i)
    rows = [[1] * (n_max + 1)]
    if i >= 1:
        if m == 2:
            rows.append([n + 1 for n in range(n_max + 1)])
        else:
            rows.append([2 * (n // m) + 1 for n in range(n_max + 1)])
    for t in range(2, i + 1):
        step = m**t
        weights = [b_m(m, m ** (t - u) - m) for u in range(t)]
        row = list(rows[t - 1])
        for n in range(step, n_max + 1):
            row[n] += sum(rows[u][n - step] * weights[u] for u in range(t)) + row[n - step]
        rows.append(row)
    return rows[i]


def b_i0(m: int, i: int, n: int) -> int:
    if n < 0:
        return 0
    return b_i0_table(m, i, n)[n]


def b_i0_enumerated(m: int, i: int, n_max: int) -> list[int]:
    """Same quantity by direct subsum enumeration over parts {1, m, ..., m^i}."""
    MarySpec(m, i)
    return one_row_table(n_max, [m**t for t in range(i + 1)])


# --------------------------------------------------------------------------
# b_{i,j}(2, n)
# --------------------------------------------------------------------------

def b_ij_table(m: int, i: int, j: int, n_max: int) -> list[int]:
    """Rows via b_{i,j}(n) = b_{i,j}(n - m^j) + b_{i,j-1}(n)."""
    MarySpec(m, i, j)
    row = b_i0_table(m, i, n_max)
    for t in range(1, j + 1):
        step = m**t
        for n in range(step, n_max + 1):
            row[n] += row[n - step]
    return row


def b_ij(m: int, i: int, j: int, n: int) -> int:
    if n < 0:
        return 0
    return b_ij_table(m, i, j, n)[n]


def b_ij_convolution(m: int, i: int, j: int, n: int) -> int:
    """sum_u p_{m, ..., m^j}(u) b_{i,0}(2, n-u)."""
    MarySpec(m, i, j)
    two_row = p_multiset_table(n, [m**t for t in range(1, j + 1)])
    one_row = b_i0_table(m, i, n)
    return sum(two_row[u] * one_row[n - u] for u in range(n + 1))


def b_full(m: int, n: int) -> int:
    """b(2,n) with every power of m allowed; saturates at exponent log_m n."""
    MarySpec(m)
    if n <= 0:
        return 1 if n == 0 else 0
    e = int_log(n, m)
    return b_ij(m, e, e, n)


# --------------------------------------------------------------------------
# congruences mod m
# --------------------------------------------------------------------------

def congruence_predict(kind: str, m: int, n: int, i: int = 0, j: int = 0) -> int:
    """Digit-product prediction of the count mod m."""
    MarySpec(m, i, j)
    c = digits_base(n, m)
    if kind == "alkauskas":
        value = prod(c[l] + 1 for l in range(1, len(c)))
    elif kind in ("b_i0", "b_ij"):
        if kind == "b_i0":
            j = 0
        if m == 2:
            if i == 0:
                raise ValueError("for m = 2 the rectangular congruences need i >= 1")
            value = prod(c[l] + 1 for l in range(j + 1))
        else:
            value = prod(2 * c[l] + 1 for l in range(1, i + 1)) * prod(
                c[l] + 1 for l in range(1, j + 1)
            )
    elif kind == "b_ij_empirical":
        if m == 2:
            return congruence_predict("b_ij", m, n, i, j)
        both = min(i, j)
        value = 1
        for l in range(1, max(i, j) + 1):
            if l <= both:
                value *= (c[l] + 1) ** 2
            elif l <= i:
                value *= 2 * c[l] + 1
            else:
                value *= c[l] + 1
    else:
        raise ValueError(f"unknown kind {kind!r}; expected one of {KINDS}")
    return value % m


@dataclass
class CongruenceReport:
    kind: str
    m: int
    i: int
    j: int
    n_max: int
    checked: int = 0
    counterexamples: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.counterexamples


def verify_congruences(kind: str, m: int, i: int = 0, j: int = 0, n_max: int = 500) -> CongruenceReport:
    """Compare the computed count mod m with the digit prediction for n <= n_max."""
    if kind == "alkauskas":
        values = b_m_table(m, n_max)
    elif kind == "b_i0":
        values = b_i0_table(m, i, n_max)
    elif kind in ("b_ij", "b_ij_empirical"):
        values = b_ij_table(m, i, j, n_max)
    else:
        raise ValueError(f"unknown kind {kind!r}")
    report = CongruenceReport(kind, m, i, j, n_max)
    for n, value in enumerate(values):
        predicted = congruence_predict(kind, m, n, i, j)
        report.checked += 1
        if value % m != predicted:
            report.counterexamples.append(
                dict(n=n, digits=digits_base(n, m).digits, value=value,
                     residue=value % m, predicted=predicted)
            )
    return report
