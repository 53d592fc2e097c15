"""Ratios of leading-order asymptotics to exact counts, plus the G_T and ln T / ln p diagnostics."""
import math

from rectcount import asympt
from rectcount.partcore import euler_p_table, nuclear_q, two_colored_q2_table
from rectcount.tile2 import p2_table, p_tilde_table, t_count


def main():
    p2 = p2_table(40)
    pt = p_tilde_table(40)
    print("preset     n   asym/exact")
    for n in (10, 20, 30, 40):
        print(f"P2      {n:4d}   {asympt.ratio_to_exact(asympt.P2, n, p2[n]):.4f}")
        print(f"P_TILDE {n:4d}   {asympt.ratio_to_exact(asympt.P_TILDE, n, pt[n]):.4f}")
    q2 = two_colored_q2_table(10_000)
    p = euler_p_table(10_000)
    for n in (100, 1000, 10_000):
        print(f"T       {n:5d}  {asympt.ratio_to_exact(asympt.T, n, t_count(n)):.4f}")
        print(f"Q2      {n:5d}  {asympt.ratio_to_exact(asympt.Q2, n, q2[n]):.4f}")
        print(f"HR_P    {n:5d}  {asympt.ratio_to_exact(asympt.HR_P, n, p[n]):.4f}")
        print(f"NUCLEAR {n:5d}  {asympt.ratio_to_exact(asympt.NUCLEAR, n, nuclear_q(n)):.4f}")
    print("\nln T(n) / ln p(n), sqrt 2 =", math.sqrt(2))
    for n in (100, 1000, 10_000, 100_000):
        print(f"  n = {n:6d}: {asympt.log_ratio_diag(n):.5f}")
    print("\nG_T singular form / truncated series; limit exp(pi^2/6) =", math.exp(math.pi**2 / 6))
    for x in (0.5, 0.8, 0.9, 0.95, 0.97):
        print(f"  x = {x}: {asympt.gt_singular(x) / asympt.gt_series(x, 20000):.4f}")


if __name__ == "__main__":
    main()
