"""Enumeration of ribbon tableaux and their spin / cospin polynomials.

Tableaux are built by peeling strips off the outer shape, one label at a
time from the largest label down. Each retained search state carries the
partially filled head array, the remaining partition and the doubled spin
collected so far.

Many search states share the same remaining partition, so the polynomial
can be computed by a recursion memoized on (remaining partition, labels
left), which never materializes a single tableau.
"""
from __future__ import annotations

import math
from functools import lru_cache
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator, Sequence

from .polynomial import SpinPolynomial, poly_mirror, poly_shift, poly_sum
from .shapes import Partition, SkewShape, cell_count, conjugate, contains
from .strips import apply_strip, removable_column_sets
from .tableau import HeadArray


class ShapeWeightMismatch(ValueError):
    pass


class NoTiling(ValueError):
    pass


@dataclass(frozen=True)
class GenState:
    array: tuple[tuple[int, ...], ...]
    remaining: Partition
    spin2: int


@dataclass(frozen=True)
class LevelStats:
    nodes: tuple[int, ...]
    distinct_shapes: tuple[int, ...]


def check_instance(shape: SkewShape, k: int, weight: Sequence[int]) -> tuple[int, ...]:
    if k < 1:
        raise ValueError("ribbon order k must be at least 1")
    weight = tuple(int(x) for x in weight)
    if any(x <= 0 for x in weight):
        raise ValueError(f"weight entries must be positive, got {weight}")
    n = cell_count(shape)
    if n != k * sum(weight):
        raise ShapeWeightMismatch(
            f"shape {shape} has {n} cells but k*sum(weight) = {k}*{sum(weight)} = {k * sum(weight)}"
        )
    return weight


@lru_cache(maxsize=1 << 16)
def strip_removals(current: Partition, k: int, w: int, inner: Partition) -> tuple[tuple[tuple[int, ...], Partition, int], ...]:
    """Every strip of w ribbons removable from ``current`` that leaves a partition containing ``inner``.

    Entries are ``(head_columns, new_partition, spin2)`` in position_sets order.
    Search states repeat a lot, hence the cache.
    """
    out = []
    width = current[0] if current else 0
    for heads in removable_column_sets(current, k, w):
        pos = [0] * width
        for c in heads:
            pos[c - 1] = -k
        res = apply_strip(current, pos, k, "remove")
        if contains(res.shape, inner):
            out.append((heads, res.shape, res.spin2))
    return tuple(out)


def initial_state(shape: SkewShape) -> GenState:
    inner = shape.inner
    array = tuple(
        tuple(-1 if j < (inner[i] if i < len(inner) else 0) else 0 for j in range(n))
        for i, n in enumerate(shape.outer)
    )
    return GenState(array, shape.outer, 0)


def expand(state: GenState, label: int, k: int, w: int, inner: Partition) -> Iterator[GenState]:
    """Children of a state: every way to peel the strip carrying ``label``."""
    cols = conjugate(state.remaining)
    for heads, new, s2 in strip_removals(state.remaining, k, w, inner):
        rows = [list(r) for r in state.array]
        for c in heads:
            rows[cols[c - 1] - 1][c - 1] = label
        yield GenState(tuple(tuple(r) for r in rows), new, state.spin2 + s2)


@lru_cache(maxsize=1 << 16)
def _head_cells(current: Partition, k: int, w: int, inner: Partition) -> tuple:
    """strip_removals with head columns turned into (row, col) indices of the array."""
    cols = conjugate(current)
    return tuple(
        (tuple((cols[c - 1] - 1, c - 1) for c in heads), new, s2)
        for heads, new, s2 in strip_removals(current, k, w, inner)
    )


def _dfs(state: GenState, label: int, k: int, weight: tuple, inner: Partition) -> Iterator[tuple[tuple, int]]:
    """Leaves below ``state`` as ``(array, spin2)``, in the same order as repeated expand.

    Iterative, with one mutable array, since leaves can number in the millions.
    """
    rows = [list(r) for r in state.array]
    if label == 0:
        yield tuple(map(tuple, rows)), state.spin2
        return
    # frame: [children iterator, label, spin2 so far, cells labelled by the current child]
    frames = [[iter(_head_cells(state.remaining, k, weight[label - 1], inner)), label, state.spin2, ()]]
    while frames:
        fr = frames[-1]
        for r, c in fr[3]:
            rows[r][c] = 0
        child = next(fr[0], None)
        if child is None:
            frames.pop()
            continue
        cells, new, s2 = child
        j = fr[1]
        for r, c in cells:
            rows[r][c] = j
        fr[3] = cells
        if j == 1:
            yield tuple(map(tuple, rows)), fr[2] + s2
        else:
            frames.append([iter(_head_cells(new, k, weight[j - 2], inner)), j - 1, fr[2] + s2, ()])


def _subtree_list(args) -> list[tuple[tuple, int]]:
    return list(_dfs(*args))


def _pool(workers: int):
    return ProcessPoolExecutor(max_workers=workers)


def enumerate_tableaux(
    shape: SkewShape, k: int, weight: Sequence[int], workers: int = 1
) -> Iterator[tuple[HeadArray, int]]:
    """Yield ``(head_array, spin2)`` for every tableau of the shape and weight.

    The order is deterministic and independent of ``workers``: with several
    workers each first-level subtree is computed separately and the results
    are emitted in sequential order.
    """
    weight = check_instance(shape, k, weight)
    return _enumerate(shape, k, weight, workers)


def _enumerate(shape, k, weight, workers):
    root = initial_state(shape)
    p = len(weight)
    if p == 0:
        yield HeadArray(root.array, k), 0
        return
    if workers <= 1:
        for array, s2 in _dfs(root, p, k, weight, shape.inner):
            yield HeadArray(array, k), s2
        return
    jobs = [(child, p - 1, k, weight, shape.inner) for child in expand(root, p, k, weight[-1], shape.inner)]
    with _pool(workers) as ex:
        for chunk in ex.map(_subtree_list, jobs):
            for array, s2 in chunk:
                yield HeadArray(array, k), s2


class _Memo:
    """P(remaining, j): polynomial of all ways to peel labels j..1 from ``remaining``."""

    def __init__(self, k: int, weight: tuple, inner: Partition):
        self.k, self.weight, self.inner = k, weight, inner
        self.table: dict[tuple[Partition, int], dict[int, int]] = {}

    def __call__(self, remaining: Partition, j: int) -> dict[int, int]:
        key = (remaining, j)
        hit = self.table.get(key)
        if hit is not None:
            return hit
        if j == 0:
            result = {0: 1} if remaining == self.inner else {}
        else:
            result = {}
            for _, new, s2 in strip_removals(remaining, self.k, self.weight[j - 1], self.inner):
                for e2, c in self(new, j - 1).items():
                    result[e2 + s2] = result.get(e2 + s2, 0) + c
        self.table[key] = result
        return result


def _plain_terms(remaining, j, k, weight, inner) -> dict[int, int]:
    """Unmemoized walk over every search state."""
    terms: dict[int, int] = {}

    def walk(rem, j, spin2):
        if j == 0:
            if rem == inner:
                terms[spin2] = terms.get(spin2, 0) + 1
            return
        for _, new, s2 in strip_removals(rem, k, weight[j - 1], inner):
            walk(new, j - 1, spin2 + s2)

    walk(remaining, j, 0)
    return terms


def _subtree_poly(args) -> SpinPolynomial:
    remaining, j, k, weight, inner, s2, memoized = args
    if memoized:
        terms = _Memo(k, weight, inner)(remaining, j)
    else:
        terms = _plain_terms(remaining, j, k, weight, inner)
    return poly_shift(SpinPolynomial(terms), s2)


def spin_polynomial(
    shape: SkewShape, k: int, weight: Sequence[int], memoized: bool = True, workers: int = 1
) -> SpinPolynomial:
    """Sum of q^spin over all k-ribbon tableaux of the shape and weight (exponents doubled)."""
    weight = check_instance(shape, k, weight)
    p = len(weight)
    if workers <= 1 or p == 0:
        return _subtree_poly((shape.outer, p, k, weight, shape.inner, 0, memoized))
    jobs = [
        (new, p - 1, k, weight, shape.inner, s2, memoized)
        for _, new, s2 in strip_removals(shape.outer, k, weight[-1], shape.inner)
    ]
    with _pool(workers) as ex:
        return poly_sum(ex.map(_subtree_poly, jobs))


def max_spin2(shape: SkewShape, k: int) -> int:
    """Largest doubled spin over all k-ribbon tilings of the shape."""
    if k < 1:
        raise ValueError("ribbon order k must be at least 1")
    if cell_count(shape) % k:
        raise NoTiling(f"{cell_count(shape)} cells is not a multiple of {k}")
    inner = shape.inner
    best: dict[Partition, float] = {}

    def rec(rem: Partition) -> float:
        if rem == inner:
            return 0
        if rem in best:
            return best[rem]
        value = -math.inf
        for _, new, s2 in strip_removals(rem, k, 1, inner):
            value = max(value, s2 + rec(new))
        best[rem] = value
        return value

    value = rec(shape.outer)
    if value == -math.inf:
        raise NoTiling(f"{shape} has no {k}-ribbon tiling")
    return int(value)


def cospin_polynomial(
    shape: SkewShape, k: int, weight: Sequence[int], memoized: bool = True, workers: int = 1
) -> SpinPolynomial:
    g = spin_polynomial(shape, k, weight, memoized=memoized, workers=workers)
    if not g:
        return g
    return poly_mirror(g, max_spin2(shape, k))


def _advance(args) -> dict[Partition, int]:
    frontier, k, w, inner = args
    out: dict[Partition, int] = {}
    for rem, mult in frontier:
        for _, new, _ in strip_removals(rem, k, w, inner):
            out[new] = out.get(new, 0) + mult
    return out


def level_stats(shape: SkewShape, k: int, weight: Sequence[int], workers: int = 1) -> LevelStats:
    """Retained search states and distinct remaining partitions after each label.

    States failing the inner-containment test are never retained, so they are
    not counted. Node counts are carried as multiplicities per partition.
    """
    weight = check_instance(shape, k, weight)
    frontier: dict[Partition, int] = {shape.outer: 1}
    nodes, distinct = [], []
    ex = _pool(workers) if workers > 1 else None
    try:
        for j in range(len(weight), 0, -1):
            items = sorted(frontier.items())
            w = weight[j - 1]
            if ex is None:
                frontier = _advance((items, k, w, shape.inner))
            else:
                chunks = [items[i::workers] for i in range(workers)]
                frontier = {}
                for part in ex.map(_advance, [(c, k, w, shape.inner) for c in chunks]):
                    for rem, mult in part.items():
                        frontier[rem] = frontier.get(rem, 0) + mult
            nodes.append(sum(frontier.values()))
            distinct.append(len(frontier))
    finally:
        if ex is not None:
            ex.shutdown()
    return LevelStats(tuple(nodes), tuple(distinct))
