"""Rediscover the quasi-polynomials for p_{k,1}(2,n) and compare with the reference rows.

    python3 scripts/reproduce_table2.py            # k = 4, 5
    python3 scripts/reproduce_table2.py --k-max 8  # about 6 minutes for k = 8
"""
import argparse
import time

from rectcount.qpfit import (
    REFERENCE_P_K1,
    build_ansatz,
    fit_min_start,
    format_brackets,
    reference_qp,
    window_size,
)
from rectcount.restrict2 import p_k1_table


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--k-min", type=int, default=4)
    ap.add_argument("--k-max", type=int, default=5)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--slack", type=int, default=None, help="extra equations (default 2 lcm(1..k))")
    args = ap.parse_args()
    for k in range(args.k_min, args.k_max + 1):
        expected, _ = REFERENCE_P_K1[k]
        terms = expected + window_size(build_ansatz(k)) + 40
        t0 = time.perf_counter()
        values = p_k1_table(k, terms, args.jobs)
        t1 = time.perf_counter()
        fit, start = fit_min_start(values, k, args.slack)
        t2 = time.perf_counter()
        same = fit.canonical.same_function(reference_qp(k))
        print(f"k={k}  N_k={start} (reference {expected})  formula match={same}  "
              f"period={fit.canonical.period}  table {t1 - t0:.1f}s  fit {t2 - t1:.1f}s  holdout to n={terms}")
        print("   ", format_brackets(fit.canonical, k))


if __name__ == "__main__":
    main()
