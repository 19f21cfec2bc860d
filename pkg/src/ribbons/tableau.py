"""Ribbon tableaux and their head-array coding.

A head array has one row per row of the outer shape. Row ``i`` holds
``outer[i]`` entries: ``-1`` on cells of the inner shape, the label of a
ribbon on the cell holding that ribbon's head, and ``0`` everywhere else.
Shape and weight can be read off without rebuilding any ribbon; decoding
peels one strip per label, largest label first.

Orientation is English throughout (row 1 longest). Heads are south-west
ends, which are the frontier cells at the bottom of their columns when the
ribbon's label is peeled.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Literal, Sequence

from .shapes import (
    NotAPartition,
    Partition,
    SkewShape,
    conjugate,
    contains,
    normalize,
    skew_cells,
)
from .strips import NotARibbon, NotAStrip, RibbonCells, StripFailure, apply_strip, make_ribbon, strip_tiling

Orientation = Literal["top-down", "bottom-up"]


class InvalidCoding(ValueError):
    pass


@dataclass(frozen=True)
class HeadArray:
    rows: tuple[tuple[int, ...], ...]
    k: int

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(tuple(map(int, r)) for r in self.rows))

    @property
    def outer(self) -> Partition:
        try:
            return normalize(len(r) for r in self.rows)
        except NotAPartition:
            raise InvalidCoding("row lengths do not form a partition") from None

    @property
    def inner(self) -> Partition:
        lengths = []
        for r in self.rows:
            n = sum(1 for x in r if x == -1)
            if any(x == -1 for x in r[n:]):
                raise InvalidCoding("-1 entries must be left-justified in each row")
            lengths.append(n)
        try:
            return normalize(lengths)
        except NotAPartition:
            raise InvalidCoding("-1 region is not a partition diagram") from None

    @property
    def shape(self) -> SkewShape:
        return SkewShape(self.outer, self.inner)

    def weight(self) -> tuple[int, ...]:
        counts: dict[int, int] = {}
        for r in self.rows:
            for x in r:
                if x > 0:
                    counts[x] = counts.get(x, 0) + 1
        p = max(counts, default=0)
        return tuple(counts.get(i, 0) for i in range(1, p + 1))

    def to_text(self, orientation: Orientation = "top-down") -> str:
        rows = self.rows if orientation == "top-down" else self.rows[::-1]
        return "\n".join(" ".join(map(str, r)) for r in rows)

    @classmethod
    def from_text(cls, text: str, k: int, orientation: Orientation = "top-down") -> "HeadArray":
        rows = [tuple(int(x) for x in line.split()) for line in text.splitlines() if line.strip()]
        if orientation == "bottom-up":
            rows.reverse()
        return cls(tuple(rows), k)

    def to_json(self) -> str:
        return json.dumps({"k": self.k, "rows": [list(r) for r in self.rows]})

    @classmethod
    def from_json(cls, text: str) -> "HeadArray":
        data = json.loads(text)
        return cls(tuple(tuple(r) for r in data["rows"]), int(data["k"]))


@dataclass(frozen=True)
class RibbonTableau:
    shape: SkewShape
    k: int
    ribbons: tuple[RibbonCells, ...]

    def __post_init__(self):
        object.__setattr__(self, "ribbons", tuple(sorted(self.ribbons, key=lambda r: (r.label or 0, r.head))))

    def label_of(self) -> dict:
        """Map each cell to its ribbon label."""
        return {cell: rb.label for rb in self.ribbons for cell in rb.cells}

    def to_json(self) -> str:
        return json.dumps({
            "k": self.k,
            "outer": list(self.shape.outer),
            "inner": list(self.shape.inner),
            "ribbons": [
                {"label": rb.label, "cells": [list(c) for c in sorted(rb.cells)]}
                for rb in self.ribbons
            ],
        })

    @classmethod
    def from_json(cls, text: str) -> "RibbonTableau":
        data = json.loads(text)
        ribbons = tuple(
            make_ribbon((tuple(c) for c in rb["cells"]), int(rb["label"]))
            for rb in data["ribbons"]
        )
        return cls(SkewShape(tuple(data["outer"]), tuple(data.get("inner", ()))), int(data["k"]), ribbons)


@dataclass(frozen=True)
class Diagnostics:
    valid: bool
    label: int | None = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.valid


def _frontier_row(current: Sequence[int], col: int) -> int:
    cols = conjugate(current)
    return cols[col - 1] if col <= len(cols) else 0


@lru_cache(maxsize=1 << 16)
def _peel(current: Partition, heads: tuple, k: int) -> tuple[Partition, tuple[RibbonCells, ...], int]:
    """Remove the strip whose ribbon heads are the given cells (sorted).

    Raises StripFailure / NotAStrip / InvalidCoding on any mismatch.
    """
    columns = sorted(c for _, c in heads)
    if len(set(columns)) != len(columns):
        raise InvalidCoding("two heads with the same label share a column")
    for r, c in heads:
        if r != _frontier_row(current, c):
            raise InvalidCoding(f"head {(r, c)} is not the bottom cell of column {c}")
    width = current[0] if current else 0
    pos = [0] * width
    for c in columns:
        pos[c - 1] = -k
    outcome = apply_strip(current, pos, k, "remove")
    ribbons = strip_tiling(current, outcome.shape, k)
    if sorted(rb.head for rb in ribbons) != list(heads):
        raise InvalidCoding("strip ribbons do not start at the marked heads")
    return outcome.shape, tuple(ribbons), outcome.spin2


@lru_cache(maxsize=1 << 16)
def _peel_labelled(current: Partition, heads: tuple, k: int, label: int):
    new, strip, s2 = _peel(current, heads, k)
    return new, tuple(rb.with_label(label) for rb in strip), s2


def decode_with_spin(a: HeadArray) -> tuple[RibbonTableau, int]:
    """Decode and also return the doubled spin accumulated strip by strip."""
    k = a.k
    if k < 1:
        raise InvalidCoding("k must be at least 1")
    outer, inner = a.outer, a.inner
    if not contains(outer, inner):
        raise InvalidCoding("inner region sticks out of the outer shape")
    by_label: dict[int, list] = {}
    for i, r in enumerate(a.rows):
        for j, x in enumerate(r):
            if x > 0:
                by_label.setdefault(x, []).append((i + 1, j + 1))
            elif x < -1:
                raise InvalidCoding("entries below -1")
    p = max(by_label, default=0)
    if len(by_label) != p:
        weight = tuple(len(by_label.get(i, ())) for i in range(1, p + 1))
        raise InvalidCoding(f"labels must be 1..p with every label used, got weight {weight}")
    nonneg = sum(outer) - sum(inner)
    heads = sum(map(len, by_label.values()))
    if nonneg != k * heads:
        raise InvalidCoding(f"{nonneg} cells but {heads} heads of {k}-ribbons")

    current = outer
    ribbons: list[RibbonCells] = []
    spin2 = 0
    for label in range(p, 0, -1):
        try:
            current, strip, s2 = _peel_labelled(current, tuple(by_label[label]), k, label)
        except (StripFailure, NotAStrip) as exc:
            raise InvalidCoding(f"label {label}: {exc}") from None
        if inner and not contains(current, inner):
            raise InvalidCoding(f"label {label}: strip cuts into the inner shape")
        ribbons.extend(strip)
        spin2 += s2
    if current != inner:
        raise InvalidCoding(f"peeling ends at {current}, not at the inner shape {inner}")
    return RibbonTableau(SkewShape(outer, inner), k, tuple(ribbons)), spin2


def decode(a: HeadArray) -> RibbonTableau:
    return decode_with_spin(a)[0]


def encode(t: RibbonTableau) -> HeadArray:
    inner = t.shape.inner
    rows = [
        [-1 if j < (inner[i] if i < len(inner) else 0) else 0 for j in range(n)]
        for i, n in enumerate(t.shape.outer)
    ]
    for rb in t.ribbons:
        r, c = rb.head
        rows[r - 1][c - 1] = rb.label
    return HeadArray(tuple(tuple(r) for r in rows), t.k)


def validate(t: RibbonTableau) -> Diagnostics:
    """Check that the labelled ribbons peel off as a chain of k-ribbon strips."""
    k = t.k
    for rb in t.ribbons:
        if rb.label is None or rb.label < 1:
            return Diagnostics(False, rb.label, "ribbon without a positive label")
        if len(rb.cells) != k:
            return Diagnostics(False, rb.label, f"ribbon with {len(rb.cells)} cells, expected {k}")
        try:
            make_ribbon(rb.cells)
        except NotARibbon as exc:
            return Diagnostics(False, rb.label, str(exc))
    covered = [c for rb in t.ribbons for c in rb.cells]
    if len(covered) != len(set(covered)) or set(covered) != set(t.shape.cells()):
        return Diagnostics(False, None, "ribbons do not tile the shape exactly")
    weight = tableau_weight(t)
    if any(c == 0 for c in weight):
        return Diagnostics(False, None, f"labels are not 1..p, weight {weight}")

    current = t.shape.outer
    for label in range(len(weight), 0, -1):
        strip = [rb for rb in t.ribbons if rb.label == label]
        try:
            new, found, _ = _peel(current, tuple(sorted(rb.head for rb in strip)), k)
        except (StripFailure, NotAStrip, InvalidCoding) as exc:
            return Diagnostics(False, label, str(exc))
        if {rb.cells for rb in found} != {rb.cells for rb in strip}:
            return Diagnostics(False, label, "ribbons differ from the strip tiling")
        if not contains(new, t.shape.inner):
            return Diagnostics(False, label, "strip cuts into the inner shape")
        current = new
    if current != t.shape.inner:
        return Diagnostics(False, None, "chain does not end at the inner shape")
    return Diagnostics(True)


def tableau_spin2(t: RibbonTableau) -> int:
    return sum(rb.spin2 for rb in t.ribbons)


def tableau_weight(t: RibbonTableau) -> tuple[int, ...]:
    counts: dict[int, int] = {}
    for rb in t.ribbons:
        counts[rb.label] = counts.get(rb.label, 0) + 1
    p = max(counts, default=0)
    return tuple(counts.get(i, 0) for i in range(1, p + 1))


def render_text(t: RibbonTableau, orientation: Orientation = "top-down") -> str:
    """Draw the tableau as a character grid with ribbon borders.

    Inner cells show as ``.`` and get no borders of their own.
    """
    owner: dict = {}
    for idx, rb in enumerate(t.ribbons):
        for cell in rb.cells:
            owner[cell] = idx
    if not owner:
        return ""
    labels = {cell: str(t.ribbons[i].label) for cell, i in owner.items()}
    width = max(len(s) for s in labels.values())
    nrows = len(t.shape.outer)
    ncols = t.shape.outer[0]

    def who(r, c):
        return owner.get((r, c))

    def hborder(r, c):  # between rows r-1 and r in column c
        a, b = who(r - 1, c), who(r, c)
        return a != b

    def vborder(r, c):  # between columns c-1 and c in row r
        a, b = who(r, c - 1), who(r, c)
        return a != b

    lines = []
    for r in range(1, nrows + 2):
        # border line above row r
        parts = []
        for c in range(1, ncols + 2):
            up = r > 1 and vborder(r - 1, c)
            down = r <= nrows and vborder(r, c)
            left = c > 1 and hborder(r, c - 1)
            right = c <= ncols and hborder(r, c)
            if (up or down) and (left or right):
                ch = "+"
            elif up or down:
                ch = "|"
            elif left or right:
                ch = "-"
            else:
                ch = " "
            parts.append(ch)
            if c <= ncols:
                parts.append(("-" if right else " ") * (width + 2))
        lines.append("".join(parts).rstrip())
        if r > nrows:
            break
        parts = []
        for c in range(1, ncols + 2):
            parts.append("|" if vborder(r, c) else " ")
            if c <= ncols:
                if (r, c) in labels:
                    text = labels[(r, c)]
                elif c <= t.shape.outer[r - 1]:
                    text = "."
                else:
                    text = ""
                parts.append(f" {text:>{width}} " if text else " " * (width + 2))
        lines.append("".join(parts).rstrip())
    if orientation == "bottom-up":
        lines.reverse()
    return "\n".join(lines)
