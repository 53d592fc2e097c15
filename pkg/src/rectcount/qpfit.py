"""Exact quasi-polynomial discovery for integer sequences.

The ansatz is

    f(n) = sum_{j=1..k} sum_{i=0..k-1} [r_{i,j,0}, ..., r_{i,j,j-1}]_j n^i

where [r_0, ..., r_{m-1}]_m picks r_{n mod m}. The basis is heavily
redundant (a period-2 bracket is also a period-4 bracket, every bracket
contains constants), so solutions are found by rank-revealing exact
elimination with free unknowns pinned to zero, then normalized to a
per-residue polynomial table with the smallest period.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

__all__ = [
    "AnsatzBasis",
    "QuasiPolynomial",
    "FitResult",
    "WindowTooSmall",
    "NoFitFound",
    "build_ansatz",
    "window_size",
    "solve_exact",
    "fit_window",
    "fit_min_start",
    "fit_scan",
    "REFERENCE_P_K1",
    "reference_qp",
    "evaluate_qp",
    "qp_from_brackets",
    "to_brackets",
    "format_brackets",
    "format_residue_table",
    "GFReport",
    "rational_gf_check",
    "cyclotomic_denominator",
    "gf_denominator",
    "lcm_upto",
]


class WindowTooSmall(ValueError):
    pass


class NoFitFound(RuntimeError):
    pass


def lcm_upto(k: int) -> int:
    out = 1
    for j in range(1, k + 1):
        out = lcm(out, j)
    return out


@dataclass(frozen=True)
class AnsatzBasis:
    k: int
    terms: tuple[tuple[int, int, int], ...]  # (power i, modulus j, residue r)

    def __len__(self):
        return len(self.terms)

    @property
    def period(self) -> int:
        return lcm_upto(self.k)

    def row(self, n: int) -> list[int]:
        return [n**i if n % j == r else 0 for i, j, r in self.terms]


def build_ansatz(k: int) -> AnsatzBasis:
    """All (i, j, r) with 0 <= i < k, 1 <= j <= k, 0 <= r < j."""
    if k < 1:
        raise ValueError("k must be >= 1")
    terms = tuple((i, j, r) for j in range(1, k + 1) for i in range(k) for r in range(j))
    return AnsatzBasis(k, terms)


def window_size(basis: AnsatzBasis) -> int:
    """Unknowns plus two full periods of extra equations."""
    return len(basis) + 2 * basis.period


# --------------------------------------------------------------------------
# exact linear algebra
# --------------------------------------------------------------------------

def solve_exact(rows: Sequence[Sequence[int]], rhs: Sequence[int]) -> list[Fraction] | None:
    """One solution of rows @ x = rhs over Q, free unknowns set to 0.

    Returns None when the system is inconsistent. Elimination is
    fraction-free on integers; each row is divided by its content.
    """
    ncols = len(rows[0]) if rows else 0
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    pivots: list[int] = []
    prow = 0
    for col in range(ncols):
        pick = next((r for r in range(prow, len(aug)) if aug[r][col]), None)
        if pick is None:
            continue
        aug[prow], aug[pick] = aug[pick], aug[prow]
        piv_row = aug[prow]
        p = piv_row[col]
        for r in range(len(aug)):
            if r == prow:
                continue
            f = aug[r][col]
            if not f:
                continue
            row = aug[r]
            new = [p * a - f * b for a, b in zip(row, piv_row)]
            g = 0
            for v in new:
                if v:
                    g = gcd(g, v)
                    if g == 1:
                        break
            if g > 1:
                new = [v // g for v in new]
            aug[r] = new
        pivots.append(col)
        prow += 1
        if prow == len(aug):
            break
    for r in range(prow, len(aug)):
        if aug[r][-1]:
            return None
    x = [Fraction(0)] * ncols
    for r, col in enumerate(pivots):
        x[col] = Fraction(aug[r][-1], aug[r][col])
    return x


# --------------------------------------------------------------------------
# quasi-polynomials
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class QuasiPolynomial:
    """polys[rho] holds coefficients (constant first) used when n = rho mod period."""

    period: int
    polys: tuple[tuple[Fraction, ...], ...]
    valid_from: int = 0

    def __post_init__(self):
        if self.period < 1 or len(self.polys) != self.period:
            raise ValueError("need one polynomial per residue class")
        width = max(len(p) for p in self.polys)
        polys = tuple(
            _trim(tuple(Fraction(c) for c in p) + (Fraction(0),) * (width - len(p)))
            for p in self.polys
        )
        object.__setattr__(self, "polys", polys)

    @property
    def degree(self) -> int:
        return max(len(p) for p in self.polys) - 1

    def __call__(self, n: int) -> Fraction:
        return evaluate_qp(self, n)

    def expanded(self, period: int) -> tuple[tuple[Fraction, ...], ...]:
        if period % self.period:
            raise ValueError("can only expand to a multiple of the period")
        return tuple(self.polys[rho % self.period] for rho in range(period))

    def minimal(self) -> "QuasiPolynomial":
        for s in sorted(d for d in range(1, self.period + 1) if self.period % d == 0):
            if all(self.polys[rho] == self.polys[rho % s] for rho in range(self.period)):
                return QuasiPolynomial(s, self.polys[:s], self.valid_from)
        return self

    def same_function(self, other: "QuasiPolynomial") -> bool:
        """Equal as functions of n (ignores valid_from)."""
        period = lcm(self.period, other.period)
        return self.expanded(period) == other.expanded(period)


def _trim(coeffs: tuple[Fraction, ...]) -> tuple[Fraction, ...]:
    out = list(coeffs)
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return tuple(out) if out else (Fraction(0),)


def evaluate_qp(qp: QuasiPolynomial, n: int) -> Fraction:
    coeffs = qp.polys[n % qp.period]
    value = Fraction(0)
    for c in reversed(coeffs):
        value = value * n + c
    return value


def _canonical(basis: AnsatzBasis, coeffs: Sequence[Fraction], valid_from: int) -> QuasiPolynomial:
    period = basis.period
    polys = []
    for rho in range(period):
        poly = [Fraction(0)] * basis.k
        for (i, j, r), c in zip(basis.terms, coeffs):
            if c and rho % j == r:
                poly[i] += c
        polys.append(tuple(poly))
    return QuasiPolynomial(period, tuple(polys), valid_from).minimal()


def qp_from_brackets(terms, valid_from: int = 0) -> QuasiPolynomial:
    """Build a quasi-polynomial from (power, modulus, residue values) triples.

    ``(3, 1, [Fraction(1, 18)])`` is the term n^3/18;
    ``(0, 4, [9/4, 1, 1/4, 0])`` is the bracket [9/4, 1, 1/4, 0]_4.
    """
    terms = [(i, j, [Fraction(v) for v in vals]) for i, j, vals in terms]
    for _, j, vals in terms:
        if len(vals) != j:
            raise ValueError(f"bracket of modulus {j} needs {j} entries")
    period = 1
    for _, j, _ in terms:
        period = lcm(period, j)
    degree = max(i for i, _, _ in terms)
    polys = []
    for rho in range(period):
        poly = [Fraction(0)] * (degree + 1)
        for i, j, vals in terms:
            poly[i] += vals[rho % j]
        polys.append(tuple(poly))
    return QuasiPolynomial(period, tuple(polys), valid_from).minimal()


# --------------------------------------------------------------------------
# fitting
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class FitResult:
    basis: AnsatzBasis
    coefficients: dict
    start: int
    end: int
    canonical: QuasiPolynomial
    holdout_end: int | None = None

    def raw_value(self, n: int) -> Fraction:
        return sum(
            (c * n**i for (i, j, r), c in self.coefficients.items() if n % j == r),
            Fraction(0),
        )


def _values(values) -> Sequence[int]:
    return values.values if hasattr(values, "values") else values


def fit_window(values, basis: AnsatzBasis, start: int, end: int, slack: int | None = None) -> FitResult | None:
    """Fit the ansatz to values[start..end]; None if no rational solution exists.

    Every function in the ansatz span obeys a linear recurrence whose order
    is the rank of the basis, so a nonzero member cannot vanish on
    len(basis) consecutive integers. The leading len(basis) equations
    therefore fix the function uniquely; the remaining ones are checked by
    evaluation, which is exact and much cheaper than eliminating them.
    """
    seq = _values(values)
    need = len(basis) + (2 * basis.period if slack is None else slack)
    if end - start + 1 < need:
        raise WindowTooSmall(f"window [{start}, {end}] has {end - start + 1} equations, need {need}")
    if end >= len(seq):
        raise WindowTooSmall(f"window ends at {end} but only {len(seq)} values given")
    head = range(start, start + len(basis))
    sol = solve_exact([basis.row(n) for n in head], [seq[n] for n in head])
    if sol is None:
        return None
    qp = _canonical(basis, sol, start)
    if any(evaluate_qp(qp, n) != seq[n] for n in range(start + len(basis), end + 1)):
        return None
    coeffs = {t: c for t, c in zip(basis.terms, sol) if c}
    return FitResult(basis, coeffs, start, end, qp)


def fit_min_start(values, k: int, slack: int | None = None) -> tuple[FitResult, int]:
    """Smallest start A whose window fit also predicts every later value.

    Returns (fit, A). Any feasible window that predicts the rest of the
    table agrees with the fit on the last window, so that fit is computed
    once and A is one past its last disagreement with the table. Scanning
    A upward would give the same answer with far more eliminations.
    """
    seq = _values(values)
    basis = build_ansatz(k)
    span = len(basis) + (2 * basis.period if slack is None else slack)
    last = len(seq) - span
    if last < 0:
        raise NoFitFound(f"order {k} needs at least {span} values, have {len(seq)}")
    tail = fit_window(seq, basis, last, len(seq) - 1, slack)
    if tail is None:
        raise NoFitFound(f"no quasi-polynomial of order {k} fits the last {span} values")
    qp = tail.canonical
    start = last
    while start > 0 and evaluate_qp(qp, start - 1) == seq[start - 1]:
        start -= 1
    if start + span > len(seq):
        raise NoFitFound("table too short to confirm the fit window")
    fit = fit_window(seq, basis, start, start + span - 1, slack)
    if fit is None or not fit.canonical.same_function(qp):
        raise ArithmeticError("window fit disagrees with the tail fit")
    result = FitResult(basis, fit.coefficients, start, start + span - 1,
                       QuasiPolynomial(qp.period, qp.polys, start), len(seq) - 1)
    return result, start


def fit_scan(values, k: int, slack: int | None = None, max_start: int | None = None) -> tuple[FitResult, int]:
    """Literal search: try A = 0, 1, 2, ... until a window fit holds out."""
    seq = _values(values)
    basis = build_ansatz(k)
    span = len(basis) + (2 * basis.period if slack is None else slack)
    start = 0
    while start + span <= len(seq) and (max_start is None or start <= max_start):
        fit = fit_window(seq, basis, start, start + span - 1, slack)
        if fit is not None and all(evaluate_qp(fit.canonical, n) == seq[n] for n in range(start, len(seq))):
            return FitResult(basis, fit.coefficients, fit.start, fit.end, fit.canonical, len(seq) - 1), start
        start += 1
    raise NoFitFound(f"no quasi-polynomial of order {k} fits with {len(seq)} values")


# --------------------------------------------------------------------------
# presentation
# --------------------------------------------------------------------------

def _maximal_moduli(k: int) -> list[int]:
    return [j for j in range(2, k + 1) if not any(j2 % j == 0 for j2 in range(j + 1, k + 1))]


def to_brackets(qp: QuasiPolynomial, k: int | None = None) -> dict[int, list[tuple[int, list[Fraction]]]]:
    """Split each power's residue function into a constant plus brackets.

    Brackets use the moduli <= k that divide no larger modulus <= k, with
    the entry for residue j-1 fixed at 0. Returns {power: [(modulus, entries)]}.
    """
    if k is None:
        k = max(2, max(p for p in range(1, qp.period + 1) if qp.period % p == 0))
    moduli = _maximal_moduli(k)
    period = lcm_upto(k)
    if period % qp.period:
        period = lcm(period, qp.period)
        moduli = sorted(set(moduli) | {qp.period})
    table = qp.expanded(period)
    out = {}
    for power in range(qp.degree, -1, -1):
        target = [table[rho][power] if power < len(table[rho]) else Fraction(0) for rho in range(period)]
        unknowns = [(1, 0)] + [(j, r) for j in moduli for r in range(j - 1)]
        rows = [[1 if rho % j == r else 0 for j, r in unknowns] for rho in range(period)]
        den = lcm(*(t.denominator for t in target))
        sol = solve_exact(rows, [int(t * den) for t in target])
        if sol is None:
            raise ArithmeticError("bracket decomposition failed")
        sol = [s / den for s in sol]
        terms = []
        if sol[0]:
            terms.append((1, [sol[0]]))
        pos = 1
        for j in moduli:
            entries = sol[pos : pos + j - 1] + [Fraction(0)]
            pos += j - 1
            if any(entries):
                terms.append((j, entries))
        if terms:
            out[power] = terms
    return out


def _frac(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _power(i: int) -> str:
    return "" if i == 0 else ("n" if i == 1 else f"n^{i}")


def format_brackets(qp: QuasiPolynomial, k: int | None = None) -> str:
    """Human-readable form like '1/18 n^3 + ... + [9/4, 1, 1/4, 0]_4'."""
    pieces = []
    for power, terms in to_brackets(qp, k).items():
        for j, entries in terms:
            if j == 1:
                c = entries[0]
                mag = abs(c)
                body = _power(power) if mag == 1 and power else f"{_frac(mag)} {_power(power)}".strip()
                pieces.append(("-" if c < 0 else "+", body))
            else:
                body = "[" + ", ".join(_frac(e) for e in entries) + f"]_{j}"
                pieces.append(("+", f"{body} {_power(power)}".strip()))
    if not pieces:
        return "0"
    text = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
    for sign, body in pieces[1:]:
        text += f" {sign} {body}"
    return text


def format_residue_table(qp: QuasiPolynomial) -> list[str]:
    lines = []
    for rho, poly in enumerate(qp.polys):
        terms = " + ".join(f"({_frac(c)}) {_power(i)}".strip() for i, c in reversed(list(enumerate(poly))) if c)
        lines.append(f"n = {rho} (mod {qp.period}): {terms or '0'}")
    return lines


# --------------------------------------------------------------------------
# generating-function denominators
# --------------------------------------------------------------------------

def cyclotomic_denominator(exponents: Sequence[int]) -> list[int]:
    """Coefficients of prod (1 - x^e)."""
    poly = [1]
    for e in exponents:
        new = poly + [0] * e
        for idx, c in enumerate(poly):
            new[idx + e] -= c
        poly = new
    return poly


@dataclass(frozen=True)
class GFReport:
    denominator_degree: int
    checked: int
    numerator_degree: int | None
    numerator: tuple[int, ...] = field(default=())

    @property
    def polynomial(self) -> bool:
        return self.numerator_degree is not None


def gf_denominator(k: int, l: int = 1) -> list[int]:
    """prod_{i=1..k} (1 - x^i) * prod_{i=2..l} (1 - x^i)."""
    if k < 1 or l < 1:
        raise ValueError("need k, l >= 1")
    return cyclotomic_denominator(list(range(1, k + 1)) + list(range(2, l + 1)))


def rational_gf_check(values, k: int, l: int = 1, margin: int = 40,
                      denominator: Sequence[int] | None = None) -> GFReport:
    """Multiply the series by the candidate denominator and find where it dies out.

    The numerator degree is reported only if at least ``margin`` trailing
    coefficients within the available range vanish.
    """
    seq = list(_values(values))
    if denominator is None:
        denominator = gf_denominator(k, l)
    dq = len(denominator) - 1
    if len(seq) < dq + margin:
        raise ValueError(f"need at least {dq + margin} terms, have {len(seq)}")
    prod_ = [
        sum(denominator[i] * seq[n - i] for i in range(min(n, dq) + 1))
        for n in range(len(seq))
    ]
    last = max((n for n, c in enumerate(prod_) if c), default=-1)
    if last > len(seq) - 1 - margin:
        return GFReport(dq, len(seq), None)
    return GFReport(dq, len(seq), last, tuple(prod_[: last + 1]))


# --------------------------------------------------------------------------
# reference formulas for p_{k,1}(2, n), n >= N_k
# --------------------------------------------------------------------------

def _f(text: str) -> Fraction:
    return Fraction(text)


def _b(*entries: str) -> list[Fraction]:
    return [_f(e) for e in entries]


# k -> (N_k, [(power, modulus, entries)])
REFERENCE_P_K1 = {
    4: (6, [
        (3, 1, _b("1/18")), (2, 1, _b("5/12")), (1, 1, _b("1")),
        (0, 3, _b("-5/4", "-53/36", "-121/36")),
        (0, 4, _b("9/4", "1", "1/4", "0")),
    ]),
    5: (12, [
        (4, 1, _b("1/180")), (3, 1, _b("1/12")), (2, 1, _b("31/72")),
        (1, 1, _b("11/12")), (0, 1, _b("-3037/360")),
        (0, 3, _b("19/9", "1", "0")),
        (0, 4, _b("33/8", "3", "9/8", "0")),
        (0, 5, _b("16/5", "1", "-1", "0", "0")),
    ]),
    6: (20, [
        (5, 1, _b("1/2700")), (4, 1, _b("7/720")), (3, 1, _b("77/810")),
        (2, 1, _b("31/72")), (1, 1, _b("31/540")),
        (1, 2, _b("1/6", "0")), (1, 3, _b("19/27", "1/3", "0")),
        (0, 1, _b("-430513/32400")),
        (0, 4, _b("4169/1296", "3", "281/1296", "0")),
        (0, 5, _b("178/25", "126/25", "24/25", "27/25", "0")),
        (0, 6, _b("320/81", "107/81", "1/81", "-194/81", "0", "0")),
    ]),
    7: (30, [
        (6, 1, _b("1/56700")), (5, 1, _b("1/1350")), (4, 1, _b("79/6480")),
        (3, 1, _b("161/1620")), (2, 1, _b("251/600")), (1, 1, _b("-497/1620")),
        (1, 2, _b("1/6", "0")), (1, 3, _b("82/81", "53/81", "0")),
        (0, 1, _b("-2542973/75600")),
        (0, 4, _b("3337/1296", "1", "-3143/1296", "0")),
        (0, 5, _b("252/25", "152/25", "4", "51/25", "0")),
        (0, 6, _b("797/81", "541/81", "377/81", "-58/27", "0", "0")),
        (0, 7, _b("85/7", "3", "-3", "0", "0", "0", "0")),
    ]),
    8: (42, [
        (7, 1, _b("1/1587600")), (6, 1, _b("1/25200")), (5, 1, _b("307/302400")),
        (4, 1, _b("13/960")), (3, 1, _b("45641/453600")), (2, 1, _b("313/800")),
        (2, 2, _b("1/48", "0")), (1, 1, _b("-46519/36288")),
        (1, 3, _b("82/81", "1/3", "0")), (1, 4, _b("73/64", "1/4", "-7/64", "0")),
        (0, 1, _b("-397440641/6350400")),
        (0, 5, _b("326/25", "7", "49/25", "5", "0")),
        (0, 6, _b("76817/5184", "949/81", "1859/192", "65/81", "17617/5184", "0")),
        (0, 7, _b("1230/49", "787/49", "197/49", "195/49", "102/49", "51/49", "0")),
        (0, 8, _b("85/8", "5", "-3", "0", "-83/8", "-1", "0", "0")),
    ]),
}


def reference_qp(k: int) -> QuasiPolynomial:
    """Tabulated conjectural formula for p_{k,1}(2, n), 4 <= k <= 8."""
    if k not in REFERENCE_P_K1:
        raise KeyError(f"no reference formula for k = {k}")
    start, terms = REFERENCE_P_K1[k]
    return qp_from_brackets(terms, start)
