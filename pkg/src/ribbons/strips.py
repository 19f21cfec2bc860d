"""Adding and removing k-ribbon strips.

A strip is driven by a positions vector over columns: in ``add`` mode an entry
``+k`` in column ``i`` places a ribbon whose tail (north-east end) lands in
that column; in ``remove`` mode an entry ``-k`` removes the ribbon whose head
(south-west end) sits at the bottom of column ``i``.

The computation works on the column lengths of the partition shifted by a
staircase, which turns every ribbon move into a shift of one entry by ``k``.
The number of entries a moved value jumps over is the number of columns the
ribbon spans minus one, so the strip spin comes out of the inversion count of
the sorting permutation.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator, Literal, Sequence

from .shapes import Cell, NotAPartition, Partition, conjugate, normalize, skew_cells

Mode = Literal["add", "remove"]


class StripFailure(ValueError):
    """No k-ribbon strip exists for the given positions vector.

    ``reason`` is one of ``"repeated"``, ``"negative"`` or ``"not_partition"``.
    """

    def __init__(self, reason: str, message: str = ""):
        super().__init__(message or reason)
        self.reason = reason


class NotAStrip(ValueError):
    """The skew shape has no tiling by k-ribbons satisfying the strip condition."""


class NotARibbon(ValueError):
    pass


@dataclass(frozen=True)
class StripOutcome:
    shape: Partition
    spin2: int
    weight: int


@dataclass(frozen=True, order=True)
class RibbonCells:
    """A ribbon given by its cells. ``head`` is the south-west end, ``tail`` the north-east end."""

    head: Cell
    tail: Cell
    cells: frozenset = field(compare=False)
    spin2: int = field(compare=False)
    label: int | None = None

    def with_label(self, label: int | None) -> "RibbonCells":
        return RibbonCells(self.head, self.tail, self.cells, self.spin2, label)

    def __len__(self) -> int:
        return len(self.cells)


def make_ribbon(cells, label: int | None = None) -> RibbonCells:
    """Build a ribbon from a cell set, checking it is a connected border strip."""
    cells = frozenset(cells)
    if not cells:
        raise NotARibbon("empty ribbon")
    # In a ribbon the contents col - row are distinct and consecutive, and each
    # step of +1 in content moves one cell right or one cell up.
    by_content = sorted(cells, key=lambda rc: rc[1] - rc[0])
    for a, b in zip(by_content, by_content[1:]):
        if (b[0], b[1] - 1) != a and (b[0] + 1, b[1]) != a:
            raise NotARibbon(f"cells {sorted(cells)} do not form a ribbon")
    rows = {r for r, _ in cells}
    return RibbonCells(
        head=by_content[0],
        tail=by_content[-1],
        cells=cells,
        spin2=len(rows) - 1,
        label=label,
    )


def _check_positions(pos: Sequence[int], k: int, mode: Mode) -> None:
    if k < 1:
        raise ValueError("ribbon order k must be at least 1")
    if mode not in ("add", "remove"):
        raise ValueError(f"unknown mode {mode!r}")
    step = k if mode == "add" else -k
    if any(x not in (0, step) for x in pos):
        raise ValueError(f"positions vector {tuple(pos)} must hold only 0 and {step}")
    if not any(pos):
        raise ValueError("positions vector has no nonzero entry")


def apply_strip(p: Sequence[int], pos: Sequence[int], k: int, mode: Mode) -> StripOutcome:
    """Add or remove the k-ribbon strip described by ``pos``.

    Returns the new partition, twice the strip spin and the number of ribbons.
    Raises StripFailure when no such strip exists.
    """
    _check_positions(pos, k, mode)
    cols = conjugate(p)
    m = max(len(cols), len(pos))
    v = [
        (cols[i] if i < len(cols) else 0) + (m - 1 - i) + (pos[i] if i < len(pos) else 0)
        for i in range(m)
    ]
    if min(v) < 0:
        raise StripFailure("negative", f"column vector {v} has a negative entry")
    if len(set(v)) != m:
        raise StripFailure("repeated", f"column vector {v} has a repeated entry")
    inversions = sum(1 for i in range(m) for j in range(i + 1, m) if v[i] < v[j])
    ordered = sorted(v, reverse=True)
    try:
        new_cols = normalize(x - (m - 1 - i) for i, x in enumerate(ordered))
    except NotAPartition as exc:
        raise StripFailure("not_partition", str(exc)) from None
    weight = sum(1 for x in pos if x)
    return StripOutcome(conjugate(new_cols), (k - 1) * weight - inversions, weight)


def position_sets(p: Sequence[int], k: int, w: int) -> Iterator[tuple[int, ...]]:
    """Every remove-mode positions vector over the columns of p with w entries ``-k``.

    Column sets come in lexicographic order; most of them will fail in
    apply_strip and are meant to be filtered by the caller.
    """
    width = p[0] if p else 0
    for chosen in combinations(range(width), w):
        vec = [0] * width
        for c in chosen:
            vec[c] = -k
        yield tuple(vec)


def removable_column_sets(p: Sequence[int], k: int, w: int) -> list[tuple[int, ...]]:
    """Column sets (1-based) of every removable strip of w ribbons, lexicographically.

    Same result as filtering position_sets through apply_strip, without trying
    the failing sets: an entry can drop by k only if the value it lands on is
    free or drops too, so on each residue class mod k the moving entries are
    the lowest few of a run of consecutive occupied values.
    """
    cols = conjugate(p)
    m = len(cols)
    values = {cols[i] + (m - 1 - i): i + 1 for i in range(m)}
    runs = []
    for b in sorted(values):
        if b - k in values or b < k:
            continue
        run = []
        x = b
        while x in values:
            run.append(values[x])
            x += k
        runs.append(run)
    out = []

    def rec(i: int, left: int, acc: list):
        if left == 0:
            out.append(tuple(sorted(acc)))
            return
        if i == len(runs):
            return
        for t in range(min(left, len(runs[i])) + 1):
            rec(i + 1, left - t, acc + runs[i][:t])

    if w > 0:
        rec(0, w, [])
    out.sort()
    return out


def strip_tiling(outer: Sequence[int], inner: Sequence[int], k: int) -> list[RibbonCells]:
    """The tiling of outer/inner by k-ribbons in which no tail has a strip cell above it.

    Ribbons are returned by increasing head column.
    """
    cells = set(skew_cells(outer, inner))
    if len(cells) % k:
        raise NotAStrip(f"{len(cells)} cells is not a multiple of {k}")
    found = _tile(cells, frozenset(), k, [])
    if found is None:
        raise NotAStrip(f"{tuple(outer)}/{tuple(inner)} is not a {k}-ribbon strip")
    return sorted(found, key=lambda r: r.head[1])


def _tile(cells: set, covered: frozenset, k: int, acc: list) -> list | None:
    free = cells - covered
    if not free:
        return list(acc)
    # The free cell furthest right (then highest) can only be a north-east end.
    tail = min(free, key=lambda rc: (-rc[1], rc[0]))
    if (tail[0] - 1, tail[1]) in cells:
        return None
    for path in _paths_down_left(tail, k, free):
        acc.append(make_ribbon(path))
        result = _tile(cells, covered | frozenset(path), k, acc)
        if result is not None:
            return result
        acc.pop()
    return None


def _paths_down_left(start: Cell, k: int, free: set) -> Iterator[list[Cell]]:
    def rec(path):
        if len(path) == k:
            yield list(path)
            return
        r, c = path[-1]
        for nxt in ((r, c - 1), (r + 1, c)):
            if nxt in free:
                path.append(nxt)
                yield from rec(path)
                path.pop()

    yield from rec([start])
