"""Recompute the published worked examples and print them with timings.

    python scripts/reproduce_examples.py [--parallel N]
"""
import argparse
import time

from ribbons.generator import cospin_polynomial, enumerate_tableaux, level_stats, max_spin2, spin_polynomial
from ribbons.polynomial import poly_eval_one, poly_format
from ribbons.shapes import SkewShape


def timed(label, fn, *args, **kw):
    t = time.perf_counter()
    out = fn(*args, **kw)
    print(f"[{time.perf_counter() - t:7.3f} s] {label}")
    return out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--parallel", type=int, default=1)
    args = ap.parse_args()
    w = args.parallel

    small, weight = SkewShape((8, 7, 6, 5, 1)), (3, 3, 2, 1)
    g = timed("spin polynomial, 8,7,6,5,1 / k=3 / 3,3,2,1", spin_polynomial, small, 3, weight, workers=w)
    print("   ", poly_format(g))
    print("   ", poly_format(g, "latex"))
    c = timed("cospin polynomial", cospin_polynomial, small, 3, weight, workers=w)
    print("   ", poly_format(c), f"(max spin {max_spin2(small, 3) / 2:g})")
    n = timed("enumerate tableaux", lambda: sum(1 for _ in enumerate_tableaux(small, 3, weight, workers=w)))
    print("   ", n, "tableaux")

    square = SkewShape((9,) * 9)
    g = timed("9x9 square / k=3 / weight 1^27 (memoized)", spin_polynomial, square, 3, (1,) * 27, workers=w)
    for e2, coeff in g.items():
        print(f"    q^{e2 // 2:<3d}{coeff}")
    print("    total", poly_eval_one(g), "palindromic", g.is_palindromic())

    st = timed("level statistics, 6^6 / k=3 / 3,1^9", level_stats, SkewShape((6,) * 6), 3, (3,) + (1,) * 9, workers=w)
    print("    nodes ", ",".join(map(str, st.nodes)))
    print("    shapes", ",".join(map(str, st.distinct_shapes)))


if __name__ == "__main__":
    main()
