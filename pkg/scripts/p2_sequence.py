"""Print p(2,n) and locate the published head and final term of the sequence."""
import argparse
import time

from rectcount.tile2 import p2_table

HEAD = [1, 2, 4, 10, 22, 44, 91, 172, 326, 595]
FINAL = 145550924


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=40)
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()
    t0 = time.perf_counter()
    table = p2_table(args.max_n, args.jobs)
    print(f"computed n = 0..{args.max_n} in {time.perf_counter() - t0:.1f}s")
    for n, v in enumerate(table):
        mark = ""
        if n < len(HEAD):
            mark = "ok" if HEAD[n] == v else f"published {HEAD[n]}"
        elif v == FINAL:
            mark = f"published final term (the {n + 1}th value when counting from n = 0)"
        print(f"{n:3d}  {v:>12d}  {mark}")


if __name__ == "__main__":
    main()
