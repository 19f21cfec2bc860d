"""Check whether the spin polynomial depends on the order of the weight entries.

Not asserted anywhere: this only reports what happens on small shapes.

    python scripts/weight_symmetry.py --max-cells 9 --ks 2,3
"""
import argparse
from itertools import permutations

from ribbons.generator import spin_polynomial
from ribbons.shapes import SkewShape, compositions, partitions, subpartitions


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-cells", type=int, default=9)
    ap.add_argument("--ks", default="1,2,3")
    args = ap.parse_args()
    for k in map(int, args.ks.split(",")):
        classes = broken = 0
        example = None
        for n in range(args.max_cells + 1):
            for lam in partitions(n):
                for mu in subpartitions(lam):
                    shape = SkewShape(lam, mu)
                    if len(shape) % k:
                        continue
                    seen = set()
                    for w in compositions(len(shape) // k):
                        key = tuple(sorted(w))
                        if key in seen:
                            continue
                        seen.add(key)
                        classes += 1
                        polys = {spin_polynomial(shape, k, v) for v in set(permutations(w))}
                        if len(polys) > 1:
                            broken += 1
                            example = example or (shape, w)
        print(f"k={k}: {classes} (shape, weight multiset) classes, {broken} depend on the order"
              + (f"; e.g. {example[0]} with {example[1]}" if example else ""))


if __name__ == "__main__":
    main()
