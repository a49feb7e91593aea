"""Integer partitions, their Young diagrams, and border-strip extensions.

Cells are 1-indexed ``(row, col)`` pairs; row ``r`` of a partition
``(p1, ..., pk)`` holds the cells ``(r, 1) .. (r, pr)``.  The extended
diagram adjoins one contiguous strip of cells that hugs the outside of the
diagram from the end of the first row around to the end of the first
column.  Weight polynomials are identically 1 on that strip, which is what
makes it the natural index set for the matrices built downstream.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, NamedTuple

from .errors import (
    CellOutOfRange,
    EmptyPartition,
    NonPositive,
    NotDecreasing,
    ParseError,
)

__all__ = [
    "Cell",
    "Partition",
    "ExtendedDiagram",
    "parse_partition",
    "subdiagram_shape",
    "boundary_walk_count",
    "partitions_of",
    "all_partitions",
]


class Cell(NamedTuple):
    """1-indexed (row, col) position in a diagram."""

    row: int
    col: int

    def __str__(self) -> str:
        return f"({self.row},{self.col})"


@dataclass(frozen=True)
class ExtendedDiagram:
    """A diagram together with its adjoined border strip.

    ``cells`` is the full cell set, ``border`` the strip alone.  Row ``r``
    of the extension is contiguous, running from column 1 to
    ``row_lengths[r-1]``.
    """

    base: "Partition"
    cells: frozenset[Cell]
    border: frozenset[Cell]
    row_lengths: tuple[int, ...]

    def __contains__(self, cell) -> bool:
        r, c = cell
        return 1 <= r <= len(self.row_lengths) and 1 <= c <= self.row_lengths[r - 1]


@dataclass(frozen=True)
class Partition:
    """Immutable weakly decreasing sequence of positive parts.

    The empty tuple is the empty partition.  All derived data (size, rank,
    the extended diagram) is computed from ``parts``, never stored
    separately.
    """

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        for p in parts:
            if p <= 0:
                raise NonPositive(f"parts must be positive, got {p}")
        for a, b in zip(parts, parts[1:]):
            if b > a:
                raise NotDecreasing(f"parts must be weakly decreasing, got {parts}")

    # -- basics --------------------------------------------------------

    def __len__(self) -> int:
        return len(self.parts)

    def __bool__(self) -> bool:
        return bool(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts)

    @cached_property
    def size(self) -> int:
        return sum(self.parts)

    @cached_property
    def rank(self) -> int:
        """Side of the largest square of cells anchored at the origin."""
        k = 0
        for i, p in enumerate(self.parts, start=1):
            if p < i:
                break
            k = i
        return k

    def part(self, r: int) -> int:
        """Length of row ``r``, 0 beyond the last row."""
        return self.parts[r - 1] if 1 <= r <= len(self.parts) else 0

    def __contains__(self, cell) -> bool:
        r, c = cell
        return 1 <= r <= len(self.parts) and 1 <= c <= self.parts[r - 1]

    def cells(self) -> Iterator[Cell]:
        """All cells in row-major order."""
        for r, p in enumerate(self.parts, start=1):
            for c in range(1, p + 1):
                yield Cell(r, c)

    def is_rectangle(self) -> bool:
        return bool(self.parts) and self.parts[0] == self.parts[-1]

    # -- derived diagrams ------------------------------------------------

    def conjugate(self) -> "Partition":
        """Transpose of the diagram (column lengths become rows)."""
        if not self.parts:
            return Partition()
        cols = [0] * self.parts[0]
        for p in self.parts:
            for c in range(p):
                cols[c] += 1
        return Partition(tuple(cols))

    @cached_property
    def extended(self) -> ExtendedDiagram:
        """The diagram with its border strip adjoined.

        Row 1 gains the single cell past the end of the first row; every
        further row ``r`` extends to one past the length of row ``r - 1``,
        so the strip stays contiguous down to the cell below the end of
        column 1.  The empty partition extends to the single cell (1, 1).
        """
        n = len(self.parts)
        lengths = []
        for r in range(1, n + 2):
            above = self.parts[r - 2] if r >= 2 else (self.parts[0] if self.parts else 0)
            lengths.append(above + 1)
        cells = set()
        border = set()
        for r, length in enumerate(lengths, start=1):
            own = self.part(r)
            for c in range(1, length + 1):
                cell = Cell(r, c)
                cells.add(cell)
                if c > own:
                    border.add(cell)
        return ExtendedDiagram(
            base=self,
            cells=frozenset(cells),
            border=frozenset(border),
            row_lengths=tuple(lengths),
        )

    def subdiagram(self, cell) -> "Partition":
        """Partition formed by the cells weakly southeast of ``cell``.

        Empty exactly when ``cell`` lies on the border strip.  Raises
        :class:`CellOutOfRange` for cells outside the extended diagram.
        """
        cell = Cell(*cell)
        if cell not in self.extended:
            raise CellOutOfRange(f"{cell} is outside the extended diagram of {self!r}")
        return Partition(subdiagram_shape(self, cell.row, cell.col))

    # -- enumeration ------------------------------------------------------

    def subpartitions(self) -> Iterator["Partition"]:
        """Every partition fitting inside this one, each exactly once.

        Deterministic order: lexicographic on the part tuples, so the empty
        partition comes first and ``self`` last.
        """
        n = len(self.parts)

        def grow(row: int, cap: int) -> Iterator[tuple[int, ...]]:
            yield ()
            if row > n:
                return
            for v in range(1, min(cap, self.parts[row - 1]) + 1):
                for rest in grow(row + 1, v):
                    yield (v,) + rest

        cap0 = self.parts[0] if self.parts else 0
        shapes = sorted(grow(1, cap0))
        for shape in shapes:
            yield Partition(shape)

    def removable_corners(self) -> list[Cell]:
        """Cells whose removal leaves a partition, top row first."""
        if not self.parts:
            raise EmptyPartition("the empty partition has no removable corner")
        corners = []
        for r, p in enumerate(self.parts, start=1):
            below = self.part(r + 1)
            if p > below:
                corners.append(Cell(r, p))
        return corners

    def remove_corner(self, cell) -> "Partition":
        cell = Cell(*cell)
        if cell not in self.removable_corners():
            raise ValueError(f"{cell} is not a removable corner of {self!r}")
        parts = list(self.parts)
        parts[cell.row - 1] -= 1
        if parts[cell.row - 1] == 0:
            parts.pop()
        return Partition(tuple(parts))


def subdiagram_shape(p: Partition, row: int, col: int) -> tuple[int, ...]:
    """Shape of the cells of ``p`` weakly southeast of ``(row, col)``.

    Total in both coordinates (no containment requirement); the result is
    empty whenever ``(row, col)`` is not a cell of ``p``.
    """
    if row < 1 or col < 1:
        raise CellOutOfRange(f"cell coordinates must be >= 1, got ({row},{col})")
    parts = []
    r = row
    while True:
        v = p.part(r) - col + 1
        if v <= 0:
            break
        parts.append(v)
        r += 1
    return tuple(parts)


def parse_partition(text: str) -> Partition:
    """Parse comma-separated parts; the empty string is the empty partition."""
    text = text.strip()
    if not text:
        return Partition()
    parts = []
    for token in text.split(","):
        token = token.strip()
        try:
            parts.append(int(token))
        except ValueError:
            raise ParseError(f"not an integer part: {token!r}") from None
    return Partition(tuple(parts))


def boundary_walk_count(p: Partition) -> int:
    """Number of subpartitions, counted by a monotone boundary walk.

    A contained partition corresponds to a right/up walk across the
    bounding box whose up-step at height ``y`` happens at an x-coordinate
    no greater than the matching row length.  The count is a plain dynamic
    program over lattice points and never enumerates the partitions
    themselves, so it serves as an independent cross-check for the
    enumerator.
    """
    height = len(p.parts)
    width = p.parts[0] if p.parts else 0
    ways = [1] * (width + 1)
    for y in range(1, height + 1):
        limit = p.part(height - y + 1)
        nxt = [0] * (width + 1)
        for x in range(width + 1):
            v = nxt[x - 1] if x > 0 else 0
            if x <= limit:
                v += ways[x]
            nxt[x] = v
        ways = nxt
    return ways[width]


def partitions_of(n: int) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse lexicographic order."""
    if n < 0:
        raise ValueError("size must be nonnegative")

    def rec(remaining: int, cap: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, cap), 0, -1):
            for rest in rec(remaining - first, first):
                yield (first,) + rest

    for shape in rec(n, n):
        yield Partition(shape)


def all_partitions(max_size: int) -> Iterator[Partition]:
    """All partitions of every size from 0 through ``max_size``."""
    for n in range(max_size + 1):
        yield from partitions_of(n)
