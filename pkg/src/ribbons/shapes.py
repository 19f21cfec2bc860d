"""Integer partitions, skew shapes and cell geometry.

Partitions are plain tuples of positive integers in weakly decreasing order,
so they hash cheaply and can be used directly as memo keys. Cells are
``(row, col)`` pairs, 1-based, in English orientation: row 1 is the longest
row and rows grow downward.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

Partition = tuple[int, ...]
Cell = tuple[int, int]


class NotAPartition(ValueError):
    """Raised when an integer sequence cannot be read as a partition."""


def normalize(v: Iterable[int]) -> Partition:
    """Strip trailing zeros and check the rest is weakly decreasing and positive."""
    parts = list(v)
    while parts and parts[-1] == 0:
        parts.pop()
    prev = None
    for x in parts:
        if x <= 0:
            raise NotAPartition(f"non-positive part in {tuple(v)!r}")
        if prev is not None and x > prev:
            raise NotAPartition(f"{tuple(parts)!r} is not weakly decreasing")
        prev = x
    return tuple(parts)


def conjugate(p: Sequence[int]) -> Partition:
    if not p:
        return ()
    out = []
    i = len(p)
    for j in range(1, p[0] + 1):
        while p[i - 1] < j:
            i -= 1
        out.append(i)
    return tuple(out)


def contains(outer: Sequence[int], inner: Sequence[int]) -> bool:
    if len(inner) > len(outer):
        return False
    return all(b <= a for a, b in zip(outer, inner))


def size(p: Sequence[int]) -> int:
    return sum(p)


@dataclass(frozen=True)
class SkewShape:
    outer: Partition
    inner: Partition = ()

    def __post_init__(self):
        outer = normalize(self.outer)
        inner = normalize(self.inner)
        if not contains(outer, inner):
            raise NotAPartition(f"{inner!r} is not contained in {outer!r}")
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "inner", inner)

    def cells(self) -> list[Cell]:
        return skew_cells(self.outer, self.inner)

    def __len__(self) -> int:
        return cell_count(self)

    def __str__(self) -> str:
        if not self.inner:
            return format_partition(self.outer)
        return f"{format_partition(self.outer)}/{format_partition(self.inner)}"


def cell_count(s: SkewShape) -> int:
    return sum(s.outer) - sum(s.inner)


def skew_cells(outer: Sequence[int], inner: Sequence[int] = ()) -> list[Cell]:
    """Cells of outer/inner in row-major order."""
    cells = []
    for i, row in enumerate(outer):
        start = inner[i] if i < len(inner) else 0
        cells.extend((i + 1, j) for j in range(start + 1, row + 1))
    return cells


def from_cells(cells: Iterable[Cell]) -> Partition:
    """Row lengths of a set of cells, which must form a left-justified diagram."""
    rows: dict[int, int] = {}
    n = 0
    for r, _ in cells:
        rows[r] = rows.get(r, 0) + 1
        n += 1
    p = tuple(rows.get(i, 0) for i in range(1, max(rows, default=0) + 1))
    p = normalize(p)
    if set(skew_cells(p)) != set(cells) or sum(p) != n:
        raise NotAPartition("cells do not form a partition diagram")
    return p


def partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of n in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def subpartitions(p: Sequence[int]) -> Iterator[Partition]:
    """All partitions contained in p (including () and p itself)."""
    p = tuple(p)

    def rec(i: int, bound: int) -> Iterator[Partition]:
        if i == len(p):
            yield ()
            return
        yield ()
        for x in range(1, min(bound, p[i]) + 1):
            for rest in rec(i + 1, x):
                yield (x,) + rest

    yield from rec(0, p[0] if p else 0)


def compositions(n: int) -> Iterator[tuple[int, ...]]:
    """Compositions of n into positive parts (one composition, (), for n = 0)."""
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            yield (first,) + rest


def parse_partition(text: str) -> Partition:
    """Read a literal like ``"8,7,6,5,1,1"``; ``"-"`` or ``""`` is the empty partition."""
    text = text.strip()
    if text in ("", "-"):
        return ()
    try:
        values = [int(x) for x in text.split(",")]
    except ValueError:
        raise NotAPartition(f"cannot parse partition literal {text!r}") from None
    return normalize(values)


def format_partition(p: Sequence[int]) -> str:
    return ",".join(map(str, p)) if p else "-"
