"""Brute-force reference enumeration of ribbon tilings and ribbon tableaux.

Everything here works directly on cell sets and shares nothing with the
strip algebra except the partition helpers, so agreement with the generator
is real evidence. It is exponential and meant for small shapes only.
"""
from __future__ import annotations

from itertools import combinations
from typing import NamedTuple, Sequence

from .polynomial import SpinPolynomial
from .shapes import SkewShape, skew_cells

Ribbon = frozenset  # frozenset of (row, col) cells


class BruteTableau(NamedTuple):
    """A tableau as a sorted tuple of (label, ribbon cells) pairs."""

    ribbons: tuple
    spin2: int


def is_ribbon(cells: frozenset) -> bool:
    """Connected, edge-adjacent cell set with no 2x2 square (and skew-shaped)."""
    if not cells:
        return False
    for r, c in cells:
        if {(r, c + 1), (r + 1, c), (r + 1, c + 1)} <= cells:
            return False
    start = next(iter(cells))
    seen = {start}
    stack = [start]
    while stack:
        r, c = stack.pop()
        for nb in ((r + 1, c), (r - 1, c), (r, c + 1), (r, c - 1)):
            if nb in cells and nb not in seen:
                seen.add(nb)
                stack.append(nb)
    if seen != cells:
        return False
    # Skew-shaped: each row is a contiguous run and rows shift left going down.
    rows: dict[int, list[int]] = {}
    for r, c in cells:
        rows.setdefault(r, []).append(c)
    for cols in rows.values():
        if max(cols) - min(cols) + 1 != len(cols):
            return False
    rs = sorted(rows)
    for a, b in zip(rs, rs[1:]):
        if b != a + 1 or max(rows[b]) != min(rows[a]):
            return False
    return True


def ribbon_height(cells: frozenset) -> int:
    return len({r for r, _ in cells})


def _ribbons_at(cell, k: int, free: set) -> list[Ribbon]:
    """All k-ribbons inside ``free`` whose top row starts at ``cell``."""
    r, a = cell
    out = []
    for arm in range(k):
        top = [(r, a + t) for t in range(arm + 1)]
        if not all(x in free for x in top):
            break
        rest = k - arm - 1

        def down_left(path, left):
            if left == 0:
                out.append(frozenset(top + path))
                return
            pr, pc = path[-1] if path else (r, a)
            moves = [(pr + 1, pc)] if not path else [(pr + 1, pc), (pr, pc - 1)]
            for nb in moves:
                if nb in free:
                    down_left(path + [nb], left - 1)

        down_left([], rest)
    return [rb for rb in out if is_ribbon(rb)]


def brute_tilings(shape: SkewShape, k: int) -> list[frozenset]:
    """Every tiling of the shape by k-ribbons, each a frozenset of ribbons."""
    cells = skew_cells(shape.outer, shape.inner)
    if len(cells) % k:
        return []
    order = sorted(cells)
    results: list[frozenset] = []

    def rec(free: set, acc: list):
        if not free:
            results.append(frozenset(acc))
            return
        first = next(c for c in order if c in free)
        for rb in _ribbons_at(first, k, free):
            acc.append(rb)
            rec(free - rb, acc)
            acc.pop()

    rec(set(cells), [])
    results.sort(key=lambda t: sorted(min(rb) for rb in t))
    return results


def _is_partition_diagram(cells: set) -> bool:
    for r, c in cells:
        if r > 1 and (r - 1, c) not in cells:
            return False
        if c > 1 and (r, c - 1) not in cells:
            return False
    return True


def _north_east(rb: Ribbon):
    return max(rb, key=lambda rc: rc[1] - rc[0])


def is_strip(ribbons: Sequence[Ribbon], below: set) -> bool:
    """Geometric strip test: ``below`` ∪ ribbons is the larger diagram, ``below`` the smaller.

    Both must be partition diagrams and no ribbon's north-east end may sit
    directly under a cell of the strip.
    """
    union = set().union(*ribbons)
    if not _is_partition_diagram(below):
        return False
    if not _is_partition_diagram(below | union):
        return False
    for rb in ribbons:
        r, c = _north_east(rb)
        if (r - 1, c) in union:
            return False
    return True


def brute_tableaux(shape: SkewShape, k: int, weight: Sequence[int]) -> list[BruteTableau]:
    """Every k-ribbon tableau of the shape and weight, by peeling label classes."""
    weight = tuple(weight)
    if k * sum(weight) != len(skew_cells(shape.outer, shape.inner)):
        return []
    inner_cells = set(skew_cells(shape.inner))
    out = []
    for tiling in brute_tilings(shape, k):
        ribbons = sorted(tiling, key=sorted)
        strips: dict = {}

        def choices(remaining: tuple, current: frozenset, w: int) -> list:
            # pure in its arguments, so cache per tiling
            key = (remaining, w)
            if key not in strips:
                found = []
                for chosen in combinations(range(len(remaining)), w):
                    strip = [remaining[i] for i in chosen]
                    below = current - set().union(*strip)
                    if inner_cells <= below and is_strip(strip, below):
                        rest = tuple(rb for i, rb in enumerate(remaining) if i not in chosen)
                        found.append((strip, rest, frozenset(below)))
                strips[key] = found
            return strips[key]

        def peel(j: int, remaining: tuple, current: frozenset, acc: tuple, spin2: int):
            if j == 0:
                if not remaining:
                    out.append(BruteTableau(tuple(sorted(acc)), spin2))
                return
            for strip, rest, below in choices(remaining, current, weight[j - 1]):
                step = tuple((j, cells[rb]) for rb in strip)
                peel(j - 1, rest, below, acc + step, spin2 + sum(heights[rb] for rb in strip))

        cells = {rb: tuple(sorted(rb)) for rb in ribbons}
        heights = {rb: ribbon_height(rb) - 1 for rb in ribbons}
        peel(len(weight), tuple(ribbons), frozenset(skew_cells(shape.outer)), (), 0)
    out.sort()
    return out


def brute_spin_poly(shape: SkewShape, k: int, weight: Sequence[int]) -> SpinPolynomial:
    return brute_spin_poly_from(brute_tableaux(shape, k, weight))


def brute_spin_poly_from(tableaux: Sequence[BruteTableau]) -> SpinPolynomial:
    terms: dict[int, int] = {}
    for t in tableaux:
        terms[t.spin2] = terms.get(t.spin2, 0) + 1
    return SpinPolynomial(terms)


def brute_max_spin2(shape: SkewShape, k: int) -> int | None:
    """Largest doubled spin over all tilings, or None if there is none."""
    spins = [sum(ribbon_height(rb) - 1 for rb in t) for t in brute_tilings(shape, k)]
    return max(spins, default=None)


def head_rows(t: BruteTableau, shape: SkewShape) -> tuple:
    """Head-array rows of a brute-force tableau: label at each south-west end."""
    rows = [[-1 if j < (shape.inner[i] if i < len(shape.inner) else 0) else 0
             for j in range(n)] for i, n in enumerate(shape.outer)]
    for label, cells in t.ribbons:
        r, c = cells[0] if len(cells) == 1 else min(cells, key=lambda rc: rc[1] - rc[0])
        rows[r - 1][c - 1] = label
    return tuple(map(tuple, rows))
