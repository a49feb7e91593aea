"""Exact sparse polynomial arithmetic with variables indexed by diagram cells.

Coefficients are arbitrary-precision integers.  A monomial maps cells to
positive exponents, the empty monomial being 1; a polynomial maps monomials
to nonzero coefficients, the empty map being 0.  Both are immutable and
kept in canonical form, so equality is plain structural equality.

The canonical term order used for rendering and serialization is total
degree descending, ties broken by the expanded cell sequence ascending.
With row-major letter names this reproduces forms like
``abcde+bcde+bce+cde+ce+de+c+e+1`` verbatim.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping

from .errors import NameCollision
from .partitions import Cell

__all__ = [
    "Monomial",
    "Polynomial",
    "UniPoly",
    "render",
    "coordinate_naming",
    "letter_naming",
    "polynomial_to_json",
    "polynomial_from_json",
]


class Monomial:
    """Product of cell variables with positive integer exponents."""

    __slots__ = ("_pairs", "_degree", "_hash")

    def __init__(self, pairs: Iterable[tuple[Cell, int]] | Mapping[Cell, int] = ()):
        items = pairs.items() if isinstance(pairs, Mapping) else pairs
        merged: dict[Cell, int] = {}
        for cell, exp in items:
            exp = int(exp)
            if exp == 0:
                continue
            if exp < 0:
                raise ValueError(f"negative exponent {exp} for {cell}")
            cell = Cell(int(cell[0]), int(cell[1]))
            if cell.row < 1 or cell.col < 1:
                raise ValueError(f"cell coordinates must be >= 1, got {cell}")
            merged[cell] = merged.get(cell, 0) + exp
        self._pairs = tuple(sorted(merged.items()))
        self._degree = sum(e for _, e in self._pairs)
        self._hash = hash(self._pairs)

    @classmethod
    def _raw(cls, pairs: tuple[tuple[Cell, int], ...]) -> "Monomial":
        m = object.__new__(cls)
        m._pairs = pairs
        m._degree = sum(e for _, e in pairs)
        m._hash = hash(pairs)
        return m

    @classmethod
    def variable(cls, cell) -> "Monomial":
        return cls(((Cell(*cell), 1),))

    @classmethod
    def from_cells(cls, cells: Iterable) -> "Monomial":
        counts: dict[Cell, int] = {}
        for cell in cells:
            cell = Cell(*cell)
            counts[cell] = counts.get(cell, 0) + 1
        return cls(counts)

    @property
    def pairs(self) -> tuple[tuple[Cell, int], ...]:
        return self._pairs

    @property
    def degree(self) -> int:
        return self._degree

    @property
    def is_one(self) -> bool:
        return not self._pairs

    def cells(self) -> tuple[Cell, ...]:
        return tuple(c for c, _ in self._pairs)

    def exponent(self, cell) -> int:
        cell = Cell(*cell)
        for c, e in self._pairs:
            if c == cell:
                return e
        return 0

    def expanded(self) -> tuple[Cell, ...]:
        """Cells repeated by exponent; the tie-break key within a degree."""
        out = []
        for cell, exp in self._pairs:
            out.extend([cell] * exp)
        return tuple(out)

    def __mul__(self, other) -> "Monomial":
        if not isinstance(other, Monomial):
            return NotImplemented
        a, b = self._pairs, other._pairs
        if not a:
            return other
        if not b:
            return self
        out = []
        i = j = 0
        while i < len(a) and j < len(b):
            ca, ea = a[i]
            cb, eb = b[j]
            if ca == cb:
                out.append((ca, ea + eb))
                i += 1
                j += 1
            elif ca < cb:
                out.append(a[i])
                i += 1
            else:
                out.append(b[j])
                j += 1
        out.extend(a[i:])
        out.extend(b[j:])
        return Monomial._raw(tuple(out))

    def translate(self, dr: int, dc: int) -> "Monomial":
        # Shifting both coordinates preserves the cell order, so no re-sort.
        pairs = tuple((Cell(c.row + dr, c.col + dc), e) for c, e in self._pairs)
        for cell, _ in pairs:
            if cell.row < 1 or cell.col < 1:
                raise ValueError(f"translation moved {cell} out of range")
        return Monomial._raw(pairs)

    def transpose(self) -> "Monomial":
        return Monomial._raw(tuple(sorted((Cell(c.col, c.row), e) for c, e in self._pairs)))

    def __eq__(self, other) -> bool:
        return isinstance(other, Monomial) and self._pairs == other._pairs

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        if not self._pairs:
            return "Monomial(1)"
        body = "*".join(
            f"x[{c.row},{c.col}]" + (f"^{e}" if e > 1 else "") for c, e in self._pairs
        )
        return f"Monomial({body})"


def _term_key(item: tuple[Monomial, int]):
    mono, _ = item
    return (-mono.degree, mono.expanded())


class Polynomial:
    """Immutable sparse polynomial over the integers."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        clean: dict[Monomial, int] = {}
        if terms:
            for mono, coeff in terms.items():
                if not isinstance(mono, Monomial):
                    raise TypeError(f"term keys must be Monomial, got {type(mono)!r}")
                coeff = int(coeff)
                if coeff:
                    clean[mono] = coeff
        self._terms = clean
        self._hash = None

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls) -> "Polynomial":
        return _ZERO

    @classmethod
    def one(cls) -> "Polynomial":
        return _ONE

    @classmethod
    def constant(cls, value: int) -> "Polynomial":
        return cls({Monomial(): int(value)})

    @classmethod
    def variable(cls, cell) -> "Polynomial":
        return cls({Monomial.variable(cell): 1})

    @classmethod
    def from_monomial(cls, mono: Monomial, coeff: int = 1) -> "Polynomial":
        return cls({mono: coeff})

    @classmethod
    def _promote(cls, value):
        if isinstance(value, Polynomial):
            return value
        if isinstance(value, int):
            return cls.constant(value)
        return None

    # -- inspection -------------------------------------------------------

    def items(self) -> Iterator[tuple[Monomial, int]]:
        """Terms in no particular order; see :meth:`sorted_terms`."""
        return iter(self._terms.items())

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        """Terms in canonical order (degree descending, then cell-lex)."""
        return sorted(self._terms.items(), key=_term_key)

    def coefficient(self, mono: Monomial) -> int:
        return self._terms.get(mono, 0)

    def variables(self) -> frozenset[Cell]:
        cells = set()
        for mono in self._terms:
            cells.update(mono.cells())
        return frozenset(cells)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def degree(self) -> int:
        """Maximal total degree, 0 for the zero polynomial."""
        return max((m.degree for m in self._terms), default=0)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other) -> "Polynomial":
        other = Polynomial._promote(other)
        if other is None:
            return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        terms = dict(self._terms)
        for mono, coeff in other._terms.items():
            c = terms.get(mono, 0) + coeff
            if c:
                terms[mono] = c
            else:
                terms.pop(mono, None)
        out = Polynomial.__new__(Polynomial)
        out._terms = terms
        out._hash = None
        return out

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        out = Polynomial.__new__(Polynomial)
        out._terms = {m: -c for m, c in self._terms.items()}
        out._hash = None
        return out

    def __sub__(self, other) -> "Polynomial":
        other = Polynomial._promote(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        other = Polynomial._promote(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, int):
            if other == 0:
                return _ZERO
            out = Polynomial.__new__(Polynomial)
            out._terms = {m: c * other for m, c in self._terms.items()}
            out._hash = None
            return out
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self._terms, other._terms
        if len(a) > len(b):
            a, b = b, a
        terms: dict[Monomial, int] = {}
        for m1, c1 in a.items():
            for m2, c2 in b.items():
                m = m1 * m2
                c = terms.get(m, 0) + c1 * c2
                if c:
                    terms[m] = c
                else:
                    terms.pop(m, None)
        out = Polynomial.__new__(Polynomial)
        out._terms = terms
        out._hash = None
        return out

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = _ONE
        for _ in range(n):
            result = result * self
        return result

    # -- ring maps -----------------------------------------------------------

    def evaluate_at_ones(self) -> int:
        """Value with every variable set to 1, i.e. the coefficient sum."""
        return sum(self._terms.values())

    def substitute_uniform(self) -> "UniPoly":
        """Send every variable to the same univariate symbol."""
        if not self._terms:
            return UniPoly()
        coeffs = [0] * (self.degree + 1)
        for mono, coeff in self._terms.items():
            coeffs[mono.degree] += coeff
        return UniPoly(coeffs)

    def translate(self, dr: int, dc: int) -> "Polynomial":
        out = Polynomial.__new__(Polynomial)
        out._terms = {m.translate(dr, dc): c for m, c in self._terms.items()}
        out._hash = None
        return out

    def transpose_variables(self) -> "Polynomial":
        out = Polynomial.__new__(Polynomial)
        out._terms = {m.transpose(): c for m, c in self._terms.items()}
        out._hash = None
        return out

    # -- comparisons -----------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"Polynomial({render(self)})"


_ZERO = Polynomial()
_ONE = Polynomial({Monomial(): 1})


def coordinate_naming(cells: Iterable[Cell]) -> dict[Cell, str]:
    """Explicit ``x[r,c]`` names for the given cells."""
    return {Cell(*c): f"x[{c[0]},{c[1]}]" for c in cells}


_LETTERS = "abcdefghijklmnopqrstuvwxyz"


def letter_naming(cells: Iterable[Cell]) -> dict[Cell, str]:
    """Single letters a, b, c, ... assigned to cells in the order given.

    Raises :class:`NameCollision` when more than 26 distinct cells need
    names, rather than inventing ambiguous multi-letter labels.
    """
    naming: dict[Cell, str] = {}
    for cell in cells:
        cell = Cell(*cell)
        if cell in naming:
            continue
        if len(naming) == len(_LETTERS):
            raise NameCollision("more than 26 variables; letter naming is ambiguous")
        naming[cell] = _LETTERS[len(naming)]
    return naming


def render(poly: Polynomial, naming: Mapping[Cell, str] | None = None) -> str:
    """Canonical text form of a polynomial.

    Terms appear in degree-descending order with cell-lex tie-break; a
    coefficient of +-1 is rendered as a bare sign, exponents above 1 as
    ``name^e``.  ``naming`` must be injective over the variables present.
    """
    if poly.is_zero:
        return "0"
    present = sorted(poly.variables())
    if naming is None:
        naming = coordinate_naming(present)
    names = {cell: naming[cell] for cell in present}
    if len(set(names.values())) != len(names):
        raise NameCollision(f"naming is not injective over {present}")
    pieces = []
    for mono, coeff in poly.sorted_terms():
        if mono.is_one:
            pieces.append(str(coeff))
            continue
        body = "".join(
            names[cell] + (f"^{exp}" if exp > 1 else "") for cell, exp in mono.pairs
        )
        if coeff == 1:
            pieces.append(body)
        elif coeff == -1:
            pieces.append("-" + body)
        else:
            pieces.append(f"{coeff}{body}")
    return "+".join(pieces).replace("+-", "-")


def polynomial_to_json(poly: Polynomial) -> list:
    """Canonically ordered term list; coefficients as decimal strings."""
    return [
        {
            "coeff": str(coeff),
            "monomial": [[cell.row, cell.col, exp] for cell, exp in mono.pairs],
        }
        for mono, coeff in poly.sorted_terms()
    ]


def polynomial_from_json(data: list) -> Polynomial:
    terms: dict[Monomial, int] = {}
    for item in data:
        mono = Monomial(tuple((Cell(r, c), e) for r, c, e in item["monomial"]))
        terms[mono] = terms.get(mono, 0) + int(item["coeff"])
    return Polynomial(terms)


class UniPoly:
    """Dense univariate polynomial with integer coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs = tuple(cs)

    @classmethod
    def zero(cls) -> "UniPoly":
        return cls()

    @classmethod
    def one(cls) -> "UniPoly":
        return cls((1,))

    @classmethod
    def monomial(cls, power: int, coeff: int = 1) -> "UniPoly":
        if power < 0:
            raise ValueError("power must be nonnegative")
        return cls((0,) * power + (coeff,))

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree of the top term, -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    def coefficient(self, k: int) -> int:
        return self._coeffs[k] if 0 <= k < len(self._coeffs) else 0

    def __call__(self, x: int) -> int:
        value = 0
        for c in reversed(self._coeffs):
            value = value * x + c
        return value

    def __add__(self, other) -> "UniPoly":
        if isinstance(other, int):
            other = UniPoly((other,))
        if not isinstance(other, UniPoly):
            return NotImplemented
        n = max(len(self._coeffs), len(other._coeffs))
        return UniPoly(
            tuple(self.coefficient(k) + other.coefficient(k) for k in range(n))
        )

    __radd__ = __add__

    def __mul__(self, other) -> "UniPoly":
        if isinstance(other, int):
            return UniPoly(tuple(c * other for c in self._coeffs))
        if not isinstance(other, UniPoly):
            return NotImplemented
        if not self._coeffs or not other._coeffs:
            return UniPoly()
        out = [0] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a:
                for j, b in enumerate(other._coeffs):
                    out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = UniPoly((other,))
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"UniPoly({self.render()})"

    def render(self, name: str = "q") -> str:
        """Ascending-power text form, e.g. ``1+2q+q^2+q^3``."""
        if not self._coeffs:
            return "0"
        pieces = []
        for k, c in enumerate(self._coeffs):
            if c == 0:
                continue
            if k == 0:
                pieces.append(str(c))
                continue
            var = name if k == 1 else f"{name}^{k}"
            if c == 1:
                pieces.append(var)
            elif c == -1:
                pieces.append("-" + var)
            else:
                pieces.append(f"{c}{var}")
        return "+".join(pieces).replace("+-", "-")

    def to_polynomial(self, cell=Cell(1, 1)) -> Polynomial:
        """Embed into the multivariate ring using a single cell variable."""
        cell = Cell(*cell)
        terms = {}
        for k, c in enumerate(self._coeffs):
            if c:
                terms[Monomial(((cell, k),))] = c
        return Polynomial(terms)
