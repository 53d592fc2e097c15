"""Brute-force p(n, n) and p(3, n) with the tiling oracle."""
import argparse
import time

from rectcount.oracle import MAX_CELLS, count_multisets

PUBLISHED = {1: 1, 2: 4, 3: 21, 4: 192, 5: 2035, 6: 27407}


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=5, help="6 takes a few minutes")
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()
    for n in range(1, args.max_n + 1):
        t0 = time.perf_counter()
        v = count_multisets(n, n, override=n * n > MAX_CELLS, jobs=args.jobs)
        print(f"p({n},{n}) = {v:<8d} published {PUBLISHED.get(n)}  {time.perf_counter() - t0:.1f}s")
    for n in range(1, 6):
        print(f"p(3,{n}) = {count_multisets(3, n)}")


if __name__ == "__main__":
    main()
