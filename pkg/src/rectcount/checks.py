"""Invariant sweeps shared by the ``verify`` command and the test suite."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from . import asympt, mary2, oracle, qpfit, restrict2, tile2
from .partcore import euler_p_table

P2_PREFIX = (1, 2, 4, 10, 22, 44, 91, 172, 326, 595)
SQUARES = (1, 4, 21, 192, 2035, 27407)
P2_39 = 145550924


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


def _result(name, ok, detail=""):
    return CheckResult(name, bool(ok), detail)


# --------------------------------------------------------------------------
# individual checks
# --------------------------------------------------------------------------

def check_p2_prefix() -> CheckResult:
    got = tuple(tile2.p2_table(9))
    return _result("p2 n=0..9", got == P2_PREFIX, f"got {list(got)}")


def check_p2_deep(n: int = 40, expected: int = P2_39, jobs: int = 1) -> CheckResult:
    got = tile2.p2_table(n, jobs)[n]
    return _result(f"p2({n}) = {expected}", got == expected, f"got {got}")


def check_bounds(n_max: int = 40) -> CheckResult:
    table = tile2.p2_table(n_max)
    bad = [(r.n, c.name) for n in range(1, n_max + 1)
           for r in [tile2.verify_bounds(n, table)] for c in r.checks if not c.holds]
    return _result(f"bounds 1<=n<={n_max}", not bad, f"violations {bad[:5]}")


def check_closed_forms(n_max: int = 60) -> CheckResult:
    bad = [(k, l, n) for k in range(1, 4) for l in range(1, 4)
           for n in range(1, n_max + 1)
           if restrict2.p_kl(k, l, n) != restrict2.closed_form_table1(k, l, n)]
    return _result(f"closed forms k,l<=3 n<={n_max}", not bad, f"mismatches {bad[:5]}")


def check_recurrence_vs_enumeration(n_max: int = 60) -> CheckResult:
    bad = [(m, i) for m in (2, 3) for i in range(4)
           if mary2.b_i0_table(m, i, n_max) != mary2.b_i0_enumerated(m, i, n_max)]
    return _result(f"b_i0 recurrence = enumeration n<={n_max}", not bad, f"mismatches {bad}")


def check_convolution_forms(n_max: int = 60) -> CheckResult:
    bad = []
    for m in (2, 3, 5):
        for i in range(3):
            for j in range(3):
                table = mary2.b_ij_table(m, i, j, n_max)
                bad += [(m, i, j, n) for n in range(n_max + 1)
                        if table[n] != mary2.b_ij_convolution(m, i, j, n)]
    return _result(f"b_ij recurrence = convolution n<={n_max}", not bad, f"mismatches {bad[:5]}")


def check_congruences(kind: str, ms=(2, 3, 5), n_max: int | None = None) -> CheckResult:
    if n_max is None:
        n_max = 2000 if kind == "alkauskas" else 500
    bad = []
    if kind == "alkauskas":
        combos = [(m, 0, 0) for m in ms]
    elif kind == "b_i0":
        combos = [(m, i, 0) for m in ms for i in range(4) if not (m == 2 and i == 0)]
    else:
        combos = [(m, i, j) for m in ms for i in range(4) for j in range(4)
                  if not (m == 2 and i == 0)]
    for m, i, j in combos:
        report = mary2.verify_congruences(kind, m, i, j, n_max)
        bad += [(m, i, j, c["n"]) for c in report.counterexamples]
    return _result(f"congruence {kind} n<={n_max}", not bad,
                   f"{len(bad)} counterexamples, first {bad[:3]}")


def check_murty() -> CheckResult:
    got = asympt.murty_convolve(asympt.NUCLEAR, asympt.P_TILDE)
    ok = all(math.isclose(a, b, rel_tol=1e-12) for a, b in
             ((got.c, asympt.P2.c), (got.delta, asympt.P2.delta), (got.lam, asympt.P2.lam)))
    return _result("Murty composition gives the p(2,n) constants", ok, f"got {got}")


def check_benford_sum() -> CheckResult:
    total = sum(asympt.benford_expected(str(d)) for d in range(1, 10))
    return _result("Benford first-digit law sums to 1", abs(total - 1) < 1e-12, f"sum {total!r}")


def check_benford_shrinks() -> CheckResult:
    table = euler_p_table(100_000)
    small = asympt.benford_report(table[1:1001], 10, "1").distance
    large = asympt.benford_report(table[1:100_001], 10, "1").distance
    return _result("Benford distance for p(n) shrinks", large < small, f"{small:.5f} -> {large:.5f}")


def check_good_sequence() -> CheckResult:
    report = asympt.benford_good_check(asympt.P2)
    return _result("good-sequence trends for p(2,n)", report.ok,
                   f"cond {report.cond1}, {report.cond2}, {report.cond3}")


def check_fit(k: int, terms: int | None = None) -> CheckResult:
    expected_n, _ = qpfit.REFERENCE_P_K1[k]
    basis = qpfit.build_ansatz(k)
    if terms is None:
        terms = max(201, expected_n + qpfit.window_size(basis) + 20)
    values = restrict2.p_k1_table(k, terms - 1)
    fit, start = qpfit.fit_min_start(values, k)
    same = fit.canonical.same_function(qpfit.reference_qp(k))
    return _result(f"fit p_k1 k={k}", start == expected_n and same,
                   f"N={start} (expected {expected_n}), formula match {same}, holdout to {terms - 1}")


def check_oracle_p2(n_max: int = 6) -> CheckResult:
    bad = [n for n in range(n_max + 1) if oracle.count_multisets(2, n) != tile2.p2(n)]
    return _result(f"oracle p(2,n) n<={n_max}", not bad, f"mismatches {bad}")


def check_oracle_kl(n_max: int = 6) -> CheckResult:
    bad = [(k, l, n) for k in range(1, 4) for l in range(1, 4) for n in range(n_max + 1)
           if oracle.count_multisets(2, n, oracle.allow_kl(k, l)) != restrict2.p_kl(k, l, n)]
    return _result(f"oracle p_kl k,l<=3 n<={n_max}", not bad, f"mismatches {bad}")


def check_oracle_symmetric(n_max: int = 6) -> CheckResult:
    t = tile2.t_count_table(n_max)
    s = tile2.s_count_table(n_max)
    bad = [n for n in range(n_max + 1)
           if oracle.count_symmetric_multisets(n, True) != t[n]
           or oracle.count_symmetric_multisets(n, False) != s[n]]
    return _result(f"oracle S/T n<={n_max}", not bad, f"mismatches {bad}")


def check_squares(n_max: int = 4, jobs: int = 1) -> CheckResult:
    got = tuple(oracle.count_multisets(n, n, override=n * n > oracle.MAX_CELLS, jobs=jobs)
                for n in range(1, n_max + 1))
    return _result(f"oracle squares n<={n_max}", got == SQUARES[:n_max], f"got {list(got)}")


# --------------------------------------------------------------------------
# suites
# --------------------------------------------------------------------------

Suite = list[tuple[str, Callable[[], CheckResult]]]

SUITES: dict[str, Suite] = {
    "core": [
        ("p2", check_p2_prefix),
        ("bounds", check_bounds),
        ("closed", check_closed_forms),
        ("recurrence", check_recurrence_vs_enumeration),
        ("convolution", check_convolution_forms),
        ("alkauskas", lambda: check_congruences("alkauskas")),
        ("b_i0", lambda: check_congruences("b_i0")),
        ("b_ij_empirical", lambda: check_congruences("b_ij_empirical")),
        ("murty", check_murty),
        ("benford_sum", check_benford_sum),
        ("good", check_good_sequence),
    ],
    "oracle": [
        ("oracle_p2", check_oracle_p2),
        ("oracle_kl", check_oracle_kl),
        ("oracle_sym", check_oracle_symmetric),
        ("squares", check_squares),
    ],
    "fit": [
        ("fit4", lambda: check_fit(4)),
        ("fit5", lambda: check_fit(5)),
    ],
    "congruence": [
        ("alkauskas", lambda: check_congruences("alkauskas")),
        ("b_i0", lambda: check_congruences("b_i0")),
        ("b_ij", lambda: check_congruences("b_ij")),
    ],
    "benford": [
        ("benford_sum", check_benford_sum),
        ("benford_shrinks", check_benford_shrinks),
        ("good", check_good_sequence),
    ],
}

LONG_RUNNING: Suite = [
    ("p2_deep", check_p2_deep),
    ("square5", lambda: check_squares(5)),
    ("fit6", lambda: check_fit(6)),
    ("fit7", lambda: check_fit(7)),
    ("fit8", lambda: check_fit(8)),
]


def run_suite(name: str, long_running: bool = False) -> list[CheckResult]:
    if name == "all":
        names = list(SUITES)
    elif name in SUITES:
        names = [name]
    else:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES) + ['all']}")
    seen, out = set(), []
    for suite in names:
        for key, fn in SUITES[suite]:
            if key not in seen:
                seen.add(key)
                out.append(fn())
    if long_running:
        out.extend(fn() for _, fn in LONG_RUNNING)
    return out
