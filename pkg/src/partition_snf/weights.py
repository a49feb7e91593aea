"""Weight polynomials on the extended diagram and the matrices built from them.

The weight of a cell is a generating function: sum, over every partition
contained in the sub-diagram hanging southeast of the cell, of the product
of the variables on the complementary cells.  Cells of the border strip
(and any position beyond it) carry the empty sub-diagram, so their weight
is 1.  Variables are always indexed by absolute diagram coordinates, even
deep inside a sub-diagram.

Weights depend on the sub-diagram only through its shape, so they are
memoized per shape in (1,1)-anchored form and translated into place; the
same shapes recur across cells and across whole reduction runs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

from .errors import (
    CellOutOfRange,
    CornerNotOnBorder,
    DimensionMismatch,
    InternalGeometryError,
)
from .partitions import Cell, Partition, subdiagram_shape
from .polynomials import (
    Monomial,
    Polynomial,
    polynomial_from_json,
    polynomial_to_json,
)

__all__ = [
    "PolyMatrix",
    "weight_polynomial",
    "weight_at",
    "leading_monomial",
    "square_matrix",
    "rect_weight_matrix",
    "clear_weight_cache",
]

_SHAPE_CACHE: dict[tuple[int, ...], Polynomial] = {}


def clear_weight_cache() -> None:
    _SHAPE_CACHE.clear()


def _relative_weight(shape: tuple[int, ...]) -> Polynomial:
    """Weight of a shape anchored at (1,1), memoized by shape."""
    cached = _SHAPE_CACHE.get(shape)
    if cached is not None:
        return cached
    p = Partition(shape)
    terms: dict[Monomial, int] = {}
    for mu in p.subpartitions():
        cells = []
        for r, length in enumerate(shape, start=1):
            for c in range(mu.part(r) + 1, length + 1):
                cells.append(Cell(r, c))
        terms[Monomial.from_cells(cells)] = 1
    poly = Polynomial(terms)
    _SHAPE_CACHE[shape] = poly
    return poly


def _direct_weight(lam: Partition, row: int, col: int) -> Polynomial:
    """Uncached reference path building absolute monomials directly."""
    shape = subdiagram_shape(lam, row, col)
    p = Partition(shape)
    terms: dict[Monomial, int] = {}
    for mu in p.subpartitions():
        cells = []
        for r, length in enumerate(shape, start=1):
            for c in range(mu.part(r) + 1, length + 1):
                cells.append(Cell(row + r - 1, col + c - 1))
        terms[Monomial.from_cells(cells)] = 1
    return Polynomial(terms)


def weight_at(lam: Partition, row: int, col: int, *, cached: bool = True) -> Polynomial:
    """Weight of an arbitrary positive position.

    Total extension of :func:`weight_polynomial`: any position outside the
    diagram has an empty sub-diagram and weight 1, whether or not it lies
    on the border strip.  The reduction engines need this at positions one
    past the strip.
    """
    if not cached:
        return _direct_weight(lam, row, col)
    shape = subdiagram_shape(lam, row, col)
    if not shape:
        return Polynomial.one()
    return _relative_weight(shape).translate(row - 1, col - 1)


def weight_polynomial(lam: Partition, cell, *, cached: bool = True) -> Polynomial:
    """Weight of a cell of the extended diagram; 1 on the border strip."""
    cell = Cell(*cell)
    if cell not in lam.extended:
        raise CellOutOfRange(f"{cell} is outside the extended diagram of {lam!r}")
    return weight_at(lam, cell.row, cell.col, cached=cached)


def leading_monomial(lam: Partition, cell) -> Polynomial:
    """Product of all variables southeast of ``cell``; the unique top-degree
    term of the cell's weight.  Equals 1 on the border strip."""
    cell = Cell(*cell)
    if cell not in lam.extended:
        raise CellOutOfRange(f"{cell} is outside the extended diagram of {lam!r}")
    shape = subdiagram_shape(lam, cell.row, cell.col)
    cells = []
    for r, length in enumerate(shape, start=1):
        for c in range(1, length + 1):
            cells.append(Cell(cell.row + r - 1, cell.col + c - 1))
    return Polynomial.from_monomial(Monomial.from_cells(cells))


@dataclass(frozen=True)
class PolyMatrix:
    """Dense rectangular matrix of polynomials.

    ``origin`` records which extended-diagram cell the (0,0) entry sits on
    for weight grids; transform matrices keep the default (1,1).
    """

    entries: tuple[tuple[Polynomial, ...], ...]
    origin: Cell = Cell(1, 1)

    def __post_init__(self):
        rows = tuple(
            tuple(
                e if isinstance(e, Polynomial) else Polynomial.constant(e)
                for e in row
            )
            for row in self.entries
        )
        if not rows or not rows[0]:
            raise DimensionMismatch("matrix must have at least one row and column")
        width = len(rows[0])
        if any(len(row) != width for row in rows):
            raise DimensionMismatch("ragged rows in matrix")
        object.__setattr__(self, "entries", rows)
        object.__setattr__(self, "origin", Cell(*self.origin))

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable], origin=Cell(1, 1)) -> "PolyMatrix":
        return cls(tuple(tuple(row) for row in rows), origin=Cell(*origin))

    @classmethod
    def identity(cls, n: int) -> "PolyMatrix":
        one = Polynomial.one()
        zero = Polynomial.zero()
        return cls(
            tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n))
        )

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    def entry(self, i: int, j: int) -> Polynomial:
        """0-indexed access; entry (i, j) sits on cell
        (origin.row + i, origin.col + j)."""
        return self.entries[i][j]

    def cell_at(self, i: int, j: int) -> Cell:
        return Cell(self.origin.row + i, self.origin.col + j)

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix(
            tuple(
                tuple(self.entries[i][j] for i in range(self.rows))
                for j in range(self.cols)
            ),
            origin=Cell(self.origin.col, self.origin.row),
        )

    def map_entries(self, fn: Callable[[Polynomial], Polynomial]) -> "PolyMatrix":
        return PolyMatrix(
            tuple(tuple(fn(e) for e in row) for row in self.entries),
            origin=self.origin,
        )

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise DimensionMismatch(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        zero = Polynomial.zero()
        out = []
        for i in range(self.rows):
            row = self.entries[i]
            out_row = []
            for j in range(other.cols):
                acc = zero
                for k in range(self.cols):
                    a = row[k]
                    if a:
                        b = other.entries[k][j]
                        if b:
                            acc = acc + a * b
                out_row.append(acc)
            out.append(tuple(out_row))
        return PolyMatrix(tuple(out))

    def __sub__(self, other: "PolyMatrix") -> "PolyMatrix":
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        if self.rows != other.rows or self.cols != other.cols:
            raise DimensionMismatch("shape mismatch in matrix subtraction")
        return PolyMatrix(
            tuple(
                tuple(a - b for a, b in zip(ra, rb))
                for ra, rb in zip(self.entries, other.entries)
            )
        )

    def is_zero(self) -> bool:
        return all(e.is_zero for row in self.entries for e in row)

    def is_upper_unitriangular(self) -> bool:
        if self.rows != self.cols:
            return False
        one = Polynomial.one()
        for i in range(self.rows):
            if self.entries[i][i] != one:
                return False
            for j in range(i):
                if self.entries[i][j]:
                    return False
        return True

    def is_lower_unitriangular(self) -> bool:
        if self.rows != self.cols:
            return False
        one = Polynomial.one()
        for i in range(self.rows):
            if self.entries[i][i] != one:
                return False
            for j in range(i + 1, self.cols):
                if self.entries[i][j]:
                    return False
        return True

    def to_json(self) -> dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "origin": [self.origin.row, self.origin.col],
            "entries": [
                [polynomial_to_json(e) for e in row] for row in self.entries
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "PolyMatrix":
        entries = tuple(
            tuple(polynomial_from_json(e) for e in row) for row in data["entries"]
        )
        m = cls(entries, origin=Cell(*data["origin"]))
        if m.rows != data["rows"] or m.cols != data["cols"]:
            raise DimensionMismatch("declared matrix shape does not match entries")
        return m


def square_matrix(lam: Partition, cell) -> PolyMatrix:
    """The unique weight square anchored at ``cell``.

    Its side is one more than the rank of the sub-diagram at ``cell`` and
    its bottom-right corner lands on the border strip; both facts are
    geometry of the extension, so a violation is reported as
    :class:`InternalGeometryError` rather than bad input.
    """
    cell = Cell(*cell)
    ext = lam.extended
    if cell not in ext:
        raise CellOutOfRange(f"{cell} is outside the extended diagram of {lam!r}")
    side = Partition(subdiagram_shape(lam, cell.row, cell.col)).rank + 1
    corner = Cell(cell.row + side - 1, cell.col + side - 1)
    if corner not in ext.border:
        raise InternalGeometryError(
            f"square corner {corner} for anchor {cell} of {lam!r} is not on the border"
        )
    entries = tuple(
        tuple(
            weight_polynomial(lam, Cell(cell.row + u, cell.col + v))
            for v in range(side)
        )
        for u in range(side)
    )
    return PolyMatrix(entries, origin=cell)


def rect_weight_matrix(lam: Partition, d: int, e: int) -> PolyMatrix:
    """Weight matrix of the d x e rectangle anchored at (1,1).

    The corner (d, e) must sit on the border strip, which forces the whole
    rectangle inside the extended diagram.
    """
    if d < 1 or e < 1:
        raise CornerNotOnBorder(f"rectangle sides must be positive, got {d}x{e}")
    if Cell(d, e) not in lam.extended.border:
        raise CornerNotOnBorder(
            f"corner ({d},{e}) is not on the border strip of {lam!r}"
        )
    entries = tuple(
        tuple(weight_polynomial(lam, Cell(r, c)) for c in range(1, e + 1))
        for r in range(1, d + 1)
    )
    return PolyMatrix(entries)
