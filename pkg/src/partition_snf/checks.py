"""Exhaustive property suites over all partitions up to a given size.

These power the ``selftest`` command and the acceptance tests: every
identity the library is built on is replayed on every partition of size
at most ``max_size``, with failures collected rather than raised so a run
reports everything that broke.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import VerificationFailed
from .partitions import Cell, all_partitions
from .polynomials import Polynomial
from .recurrence import alternating_row_sum
from .snf import determinant, snf_inductive, snf_recurrence, verify_snf
from .weights import leading_monomial, rect_weight_matrix, square_matrix

__all__ = ["SelfTestReport", "run_selftest"]

CHECK_NAMES = (
    "row-relations",
    "snf-agreement",
    "diagonal-monomials",
    "determinant-product",
    "border-rectangles",
)


@dataclass
class SelfTestReport:
    max_size: int
    counts: dict[str, int] = field(default_factory=dict)
    failures: list[str] = field(default_factory=list)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    @property
    def ok(self) -> bool:
        return not self.failures


def run_selftest(max_size: int, det_side_limit: int = 6) -> SelfTestReport:
    """Replay the core identities over all partitions of size <= max_size.

    Checks, per partition: the alternating row relation in every column;
    agreement of the two reduction algorithms on the origin square; the
    diagonal being the expected leading monomials; the determinant oracle
    against the diagonal product (small sides only); and a certified
    reduction for every border rectangle that is at least as wide as tall.
    """
    if max_size < 1:
        raise ValueError("max_size must be at least 1")
    report = SelfTestReport(max_size=max_size, counts={name: 0 for name in CHECK_NAMES})

    def record(name: str, ok: bool, detail: str) -> None:
        report.counts[name] += 1
        if not ok:
            report.failures.append(f"{name}: {detail}")

    for lam in all_partitions(max_size):
        rho = lam.rank

        for j in range(1, rho + 2):
            residual = alternating_row_sum(lam, j)
            expected = (
                leading_monomial(lam, Cell(1, 1)) if j == 1 else Polynomial.zero()
            )
            record(
                "row-relations",
                residual == expected,
                f"partition {lam.parts} column {j}",
            )

        try:
            by_rows = snf_recurrence(lam)
            by_peeling = snf_inductive(lam, rho + 1, rho + 1)
        except VerificationFailed as exc:
            record("snf-agreement", False, f"partition {lam.parts}: {exc}")
            continue
        record(
            "snf-agreement",
            by_rows.diagonal == by_peeling.diagonal,
            f"partition {lam.parts}",
        )

        expected_diag = tuple(
            leading_monomial(lam, Cell(k, k)) for k in range(1, rho + 2)
        )
        record(
            "diagonal-monomials",
            by_rows.diagonal == expected_diag,
            f"partition {lam.parts}",
        )

        if rho + 1 <= det_side_limit:
            W = square_matrix(lam, Cell(1, 1))
            product = Polynomial.one()
            for entry in expected_diag:
                product = product * entry
            record(
                "determinant-product",
                determinant(W) == product,
                f"partition {lam.parts}",
            )

        for corner in sorted(lam.extended.border):
            d, e = corner
            if d > e:
                continue
            try:
                result = snf_inductive(lam, d, e)
            except VerificationFailed as exc:
                record(
                    "border-rectangles",
                    False,
                    f"partition {lam.parts} rectangle {d}x{e}: {exc}",
                )
                continue
            ok, _ = verify_snf(rect_weight_matrix(lam, d, e), result)
            record(
                "border-rectangles",
                ok,
                f"partition {lam.parts} rectangle {d}x{e}",
            )

    return report
