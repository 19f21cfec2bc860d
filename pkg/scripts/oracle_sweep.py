"""Exhaustive generator-vs-brute-force sweep over small skew shapes.

Usage: python scripts/oracle_sweep.py --max-cells 12 --ks 1,2,3 [--no-sets]
Prints one progress line per outer size and exits 1 on any mismatch.
"""
import argparse
import sys
import time

from ribbons.verify import compare, small_instances


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-cells", type=int, default=12)
    ap.add_argument("--min-cells", type=int, default=0)
    ap.add_argument("--ks", default="1,2,3")
    ap.add_argument("--no-sets", action="store_true")
    args = ap.parse_args()
    ks = [int(x) for x in args.ks.split(",")]
    total_bad = 0
    start = time.time()
    for n in range(args.min_cells, args.max_cells + 1):
        checked = bad = 0
        t0 = time.time()
        for shape, k, w in small_instances(n, ks, min_cells=n):
            checked += 1
            mismatch = compare(shape, k, w, sets=not args.no_sets)
            if mismatch:
                bad += 1
                print("MISMATCH", mismatch, flush=True)
        total_bad += bad
        print(f"|outer|={n:2d} k in {ks}: {checked} instances, {bad} mismatches, {time.time() - t0:.1f}s", flush=True)
    print(f"total mismatches {total_bad}, {time.time() - start:.0f}s")
    return 1 if total_bad else 0


if __name__ == "__main__":
    sys.exit(main())
