"""Staircase specialization: every variable collapses to one symbol q.

The origin weight of the staircase (n-1, n-2, ..., 1) becomes a q-analog
of the Catalan numbers; the matrices of those q-polynomials have normal
forms with pure powers of q on the diagonal, with exponents given by
binomial coefficients stepping down by two.
"""

from __future__ import annotations

from math import comb

from .partitions import Cell, Partition
from .polynomials import UniPoly
from .snf import snf_inductive
from .weights import PolyMatrix, weight_polynomial

__all__ = [
    "staircase",
    "q_catalan",
    "q_catalan_table",
    "catalan_numbers",
    "staircase_matrix",
    "expected_snf_exponents",
    "staircase_snf_diagonal",
]


def staircase(n: int) -> Partition:
    """The partition (n-1, n-2, ..., 1); empty for n <= 1."""
    if n < 0:
        raise ValueError("staircase index must be nonnegative")
    return Partition(tuple(range(n - 1, 0, -1)))


def q_catalan(n: int) -> UniPoly:
    """Origin weight of the n-th staircase with all variables set to q.

    Evaluating at q = 1 counts the subpartitions of the staircase, which
    is the n-th Catalan number.
    """
    if n < 0:
        raise ValueError("index must be nonnegative")
    if n == 0:
        return UniPoly.one()
    return weight_polynomial(staircase(n), Cell(1, 1)).substitute_uniform()


def q_catalan_table(n_max: int) -> tuple[UniPoly, ...]:
    """The q-analogs for indices 0..n_max; entries 0 and 1 are both 1."""
    if n_max < 0:
        raise ValueError("table bound must be nonnegative")
    return tuple(q_catalan(n) for n in range(n_max + 1))


def catalan_numbers(n_max: int) -> list[int]:
    """Catalan numbers 0..n_max by the convolution recurrence (oracle)."""
    values = [1]
    for n in range(1, n_max + 1):
        values.append(sum(values[k] * values[n - 1 - k] for k in range(n)))
    return values


def staircase_matrix(n: int) -> PolyMatrix:
    """The square q-polynomial matrix of the n-th staircase.

    Entry (i, j), 1-indexed, is the q-analog of index n + 2 - i - j; the
    side is n // 2 + 1.  Entries are embedded into the multivariate ring
    on the single cell (1, 1), so the determinant oracle applies directly.
    This is exactly the origin weight square of the staircase with every
    variable substituted by q.
    """
    if n < 1:
        raise ValueError("matrix index must be at least 1")
    side = n // 2 + 1
    entries = tuple(
        tuple(
            q_catalan(n + 2 - i - j).to_polynomial(Cell(1, 1))
            for j in range(1, side + 1)
        )
        for i in range(1, side + 1)
    )
    return PolyMatrix(entries)


def expected_snf_exponents(n: int) -> tuple[int, ...]:
    """Diagonal q-exponents of the n-th staircase matrix, top to bottom:
    choose(n, 2), choose(n-2, 2), ..., ending in 0."""
    if n < 1:
        raise ValueError("matrix index must be at least 1")
    return tuple(comb(n - 2 * k, 2) for k in range(n // 2 + 1))


def staircase_snf_diagonal(n: int) -> tuple[UniPoly, ...]:
    """Diagonal of the certified reduction of the n-th staircase, with all
    variables substituted by q."""
    if n < 1:
        raise ValueError("matrix index must be at least 1")
    lam = staircase(n)
    side = lam.rank + 1
    result = snf_inductive(lam, side, side)
    return tuple(entry.substitute_uniform() for entry in result.diagonal)
