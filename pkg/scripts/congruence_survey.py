"""Count counterexamples to the digit-product congruences for b_{i,j}(2,n) mod m."""
import argparse

from rectcount.mary2 import KINDS, verify_congruences


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-max", type=int, default=500)
    ap.add_argument("--moduli", type=int, nargs="+", default=[2, 3, 5, 7])
    args = ap.parse_args()
    print("kind             m  i  j  checked  counterexamples  first")
    for kind in KINDS:
        for m in args.moduli:
            for i in range(4):
                for j in range(4 if kind.startswith("b_ij") else 1):
                    if m == 2 and i == 0 and kind != "alkauskas":
                        continue
                    if kind == "alkauskas" and (i or j):
                        continue
                    rep = verify_congruences(kind, m, i, j, args.n_max)
                    first = rep.counterexamples[0]["n"] if rep.counterexamples else "-"
                    print(f"{kind:15s} {m:2d} {i:2d} {j:2d}  {rep.checked:7d}  {len(rep.counterexamples):15d}  {first}")


if __name__ == "__main__":
    main()
