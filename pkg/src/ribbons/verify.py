"""Generator-versus-brute-force comparison used by the CLI, scripts and tests."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from . import generator, oracle
from .shapes import SkewShape, compositions, partitions, subpartitions


@dataclass
class Mismatch:
    shape: SkewShape
    k: int
    weight: tuple
    what: str

    def __str__(self) -> str:
        return f"{self.shape} k={self.k} weight={self.weight}: {self.what}"


def small_instances(max_cells: int, ks: Iterable[int], min_cells: int = 0) -> Iterator[tuple[SkewShape, int, tuple]]:
    """Every (outer/inner, k, weight) with min_cells <= |outer| <= max_cells and k | cells."""
    ks = tuple(ks)
    for n in range(min_cells, max_cells + 1):
        for lam in partitions(n):
            for mu in subpartitions(lam):
                shape = SkewShape(lam, mu)
                cells = len(shape)
                for k in ks:
                    if cells % k:
                        continue
                    for w in compositions(cells // k):
                        yield shape, k, w


def compare(shape: SkewShape, k: int, weight: Sequence[int], sets: bool = True, memoized: bool = True) -> Mismatch | None:
    """Compare polynomial (and optionally the tableau multiset) with the oracle."""
    weight = tuple(weight)
    brute = oracle.brute_tableaux(shape, k, weight)
    want = oracle.brute_spin_poly_from(brute)
    got = generator.spin_polynomial(shape, k, weight, memoized=memoized)
    if got != want:
        return Mismatch(shape, k, weight, f"polynomial {got} != brute force {want}")
    if sets:
        mine = sorted((a.rows, s2) for a, s2 in generator.enumerate_tableaux(shape, k, weight))
        theirs = sorted((oracle.head_rows(t, shape), t.spin2) for t in brute)
        if mine != theirs:
            return Mismatch(shape, k, weight, f"{len(mine)} generated tableaux vs {len(theirs)} brute force")
    return None
