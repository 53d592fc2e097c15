"""Leading-order asymptotics, convolution composition, Benford diagnostics.

Growth laws are c * n^delta * exp(lam * sqrt(n)). Comparisons with exact
counts go through logarithms so nothing overflows for large n.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .partcore import euler_p, euler_p_table
from .tile2 import t_count

__all__ = [
    "AsymSpec",
    "HR_P",
    "NUCLEAR",
    "P_TILDE",
    "P2",
    "Q2",
    "T",
    "PRESETS",
    "eval_asym",
    "log_asym",
    "ratio_to_exact",
    "murty_convolve",
    "almkvist_sigma",
    "almkvist_asym",
    "gt_singular",
    "gt_series",
    "log_int",
    "log_ratio_diag",
    "BenfordReport",
    "benford_expected",
    "leading_string",
    "benford_report",
    "GoodCheck",
    "benford_good_check",
]


@dataclass(frozen=True)
class AsymSpec:
    """c * n**delta * exp(lam * sqrt(n))."""

    c: float
    delta: float
    lam: float
    name: str = ""

    def __post_init__(self):
        if not all(math.isfinite(v) for v in (self.c, self.delta, self.lam)):
            raise ValueError("AsymSpec fields must be finite")
        if self.c <= 0:
            raise ValueError("prefactor must be positive")
        if self.lam < 0:
            raise ValueError("exponential coefficient must be >= 0")


PI = math.pi
HR_P = AsymSpec(1 / (4 * math.sqrt(3)), -1.0, PI * math.sqrt(2 / 3), "HR_P")
NUCLEAR = AsymSpec(PI / (12 * math.sqrt(2)), -1.5, PI * math.sqrt(2 / 3), "NUCLEAR")
P_TILDE = AsymSpec(1 / (8 * math.sqrt(3)), -1.0, 2 * PI / math.sqrt(3), "P_TILDE")
P2 = AsymSpec(PI * 2**0.25 / 32, -1.75, PI * math.sqrt(2), "P2")
Q2 = AsymSpec(3**0.25 / 12, -1.25, 2 * PI / math.sqrt(3), "Q2")
T = AsymSpec(PI / (6 * 3**0.25), -1.75, 2 * PI / math.sqrt(3), "T")

PRESETS = {s.name: s for s in (HR_P, NUCLEAR, P_TILDE, P2, Q2, T)}


def log_asym(spec: AsymSpec, n: float) -> float:
    if n <= 0:
        raise ValueError("asymptotic formulas need n >= 1")
    return math.log(spec.c) + spec.delta * math.log(n) + spec.lam * math.sqrt(n)


def eval_asym(spec: AsymSpec, n: float) -> float:
    """Value of the growth law at n (may be inf past ~1e5 for fast laws)."""
    try:
        return math.exp(log_asym(spec, n))
    except OverflowError:
        return math.inf


def log_int(v: int) -> float:
    """Natural log of a positive int from its bit length and top 64 bits."""
    if v <= 0:
        raise ValueError("log of a non-positive integer")
    bits = v.bit_length()
    if bits <= 64:
        return math.log(v)
    shift = bits - 64
    return math.log(v >> shift) + shift * math.log(2)


def ratio_to_exact(spec: AsymSpec, n: int, exact: int) -> float:
    """asymptotic / exact, computed in log space."""
    return math.exp(log_asym(spec, n) - log_int(exact))


def murty_convolve(f: AsymSpec, g: AsymSpec) -> AsymSpec:
    """Growth law of sum_k f(k) g(n-k) by the saddle-point formula."""
    if f.lam <= 0 or g.lam <= 0:
        raise ValueError("both exponential coefficients must be positive")
    a, b = f.lam, g.lam
    alpha, beta = f.delta, g.delta
    s = a * a + b * b
    c = (
        f.c * g.c * 2 * math.sqrt(2 * PI)
        * a ** (2 * alpha + 1) * b ** (2 * beta + 1)
        / s ** (alpha + beta + 1.25)
    )
    name = f"{f.name}*{g.name}" if f.name and g.name else ""
    return AsymSpec(c, alpha + beta + 0.75, math.sqrt(s), name)


# --------------------------------------------------------------------------
# Almkvist
# --------------------------------------------------------------------------

def almkvist_sigma(parts: Sequence[int], order: int) -> float:
    """sigma_order from the power sums of ``parts`` (zero for odd order)."""
    if order % 2:
        return 0.0
    s2, s4, s6 = (sum(a**e for a in parts) for e in (2, 4, 6))
    if order == 0:
        return 1.0
    if order == 2:
        return -s2 / 24
    if order == 4:
        return (5 * s2**2 + 2 * s4) / 5760
    if order == 6:
        return -(35 * s2**3 + 42 * s2 * s4 + 16 * s6) / 2903040
    raise ValueError("orders above 6 are not tabulated")


def almkvist_asym(parts: Sequence[int], n: float, order: int = 0) -> float:
    """Polynomial approximation to p_A(n), keeping sigma_i up to ``order``."""
    parts = list(parts)
    if not parts:
        raise ValueError("A must be nonempty")
    if order not in (0, 2, 4, 6):
        raise ValueError("order must be 0, 2, 4 or 6")
    k = len(parts)
    shifted = n + sum(parts) / 2
    total = 0.0
    for i in range(0, order + 1, 2):
        power = k - 1 - i
        if power < 0:
            break
        total += almkvist_sigma(parts, i) * shifted**power / math.factorial(power)
    return total / math.prod(parts)


# --------------------------------------------------------------------------
# generating function of T(n)
# --------------------------------------------------------------------------

def gt_singular(x: float) -> float:
    """(1-x)^2/pi * exp(pi^2 / (3(1-x))), the x -> 1- behaviour of G_T."""
    if not 0 < x < 1:
        raise ValueError("x must lie in (0, 1)")
    return (1 - x) ** 2 / PI * math.exp(PI**2 / (3 * (1 - x)))


def gt_series(x: float, n_max: int = 4000) -> float:
    """Truncated sum_{n <= n_max} T(n) x^n in floating point."""
    if not 0 < x < 1:
        raise ValueError("x must lie in (0, 1)")
    p = np.array([float(v) for v in euler_p_table(n_max)[: n_max + 1]])
    q2 = np.convolve(p, p)[: n_max + 1]
    t = q2.copy()
    t[2:] -= q2[:-2]
    return float(np.sum(t * x ** np.arange(n_max + 1)))


def log_ratio_diag(n: int) -> float:
    """ln T(n) / ln p(n) from exact values."""
    if n < 2:
        raise ValueError("n must be >= 2")
    return log_int(t_count(n)) / log_int(euler_p(n))


# --------------------------------------------------------------------------
# Benford
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class BenfordReport:
    base: int
    prefix: str
    observed_frequency: float
    expected: float
    sample_size: int

    @property
    def distance(self) -> float:
        return abs(self.observed_frequency - self.expected)


_DIGITS = "0123456789abcdefghijklmnopqrstuvwxyz"


def _prefix_value(prefix: str, base: int) -> int:
    if not prefix or prefix[0] == "0":
        raise ValueError("prefix must be nonempty with a nonzero leading digit")
    value = int(prefix, base)
    return value


def benford_expected(prefix: str | int, base: int = 10) -> float:
    """log_b(f + 1) - log_b(f) for the digit string f."""
    if base < 2:
        raise ValueError("base must be >= 2")
    f = _prefix_value(prefix, base) if isinstance(prefix, str) else int(prefix)
    if f < 1:
        raise ValueError("prefix value must be >= 1")
    return math.log(f + 1, base) - math.log(f, base)


def leading_string(v: int, base: int, length: int) -> str:
    """First ``length`` base-b digits of v (fewer if v is shorter)."""
    if v <= 0:
        raise ValueError("values must be positive")
    if base == 10:
        return str(v)[:length]
    # digit count from bit length, then corrected exactly
    ndig = max(1, int(v.bit_length() / math.log2(base)))
    while base**ndig <= v:
        ndig += 1
    while ndig > 1 and base ** (ndig - 1) > v:
        ndig -= 1
    head = v // base ** max(ndig - length, 0)
    out = []
    while head:
        head, d = divmod(head, base)
        out.append(_DIGITS[d])
    return "".join(reversed(out))


def benford_report(values: Iterable[int], base: int, prefix: str) -> BenfordReport:
    """Share of ``values`` whose base-b expansion starts with ``prefix``."""
    expected = benford_expected(prefix, base)
    prefix = prefix.lower()
    hits = size = 0
    for v in values:
        if v <= 0:
            raise ValueError("Benford statistics need positive values")
        size += 1
        if leading_string(v, base, len(prefix)) == prefix:
            hits += 1
    if size == 0:
        raise ValueError("no values given")
    return BenfordReport(base, prefix, hits / size, expected, size)


@dataclass(frozen=True)
class GoodCheck:
    """Trend checks for a good-sequence exponent/prefactor pair."""

    grid: tuple[float, ...]
    c_prime: tuple[float, ...]
    n_c_prime: tuple[float, ...]
    log_b_ratio: tuple[float, ...]
    cond1: bool
    cond2: bool
    cond3: bool

    @property
    def ok(self) -> bool:
        return self.cond1 and self.cond2 and self.cond3


def _strictly_decreasing(xs):
    return all(b < a for a, b in zip(xs, xs[1:]))


def benford_good_check(spec: AsymSpec, h: int = 1, n_max: float = 1e6, points: int = 25) -> GoodCheck:
    """Check the three goodness trends for b(n) = c n^delta, c(n) = lam sqrt(n).

    Derivatives are central differences with relative step 1e-4, so the
    check does not reuse any closed-form derivative. Each quantity must be
    strictly monotone on the grid and move by at least a factor 10 from
    the first to the last grid point.
    """
    if h != 1:
        raise ValueError("only h = 1 is supported")
    grid = tuple(np.geomspace(10.0, float(n_max), points))

    def exponent(n):
        return spec.lam * math.sqrt(n)

    def log_b(n):
        return math.log(spec.c) + spec.delta * math.log(n)

    def deriv(fn, n):
        step = 1e-4 * n
        return (fn(n + step) - fn(n - step)) / (2 * step)

    cp = tuple(deriv(exponent, n) for n in grid)
    ncp = tuple(n * abs(v) for n, v in zip(grid, cp))
    ratio = tuple(deriv(log_b, n) / v if v else math.inf for n, v in zip(grid, cp))

    mag = [abs(v) for v in cp]
    cond1 = all(v > 0 for v in mag) and _strictly_decreasing(mag) and mag[-1] < mag[0] / 10
    cond2 = all(b > a for a, b in zip(ncp, ncp[1:])) and ncp[-1] > 10 * ncp[0]
    rmag = [abs(v) for v in ratio]
    cond3 = all(math.isfinite(v) for v in rmag) and _strictly_decreasing(rmag) and rmag[-1] < rmag[0] / 10
    return GoodCheck(grid, cp, ncp, ratio, cond1, cond2, cond3)
