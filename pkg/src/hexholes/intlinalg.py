"""Exact integer linear algebra for small dense matrices with symbolic labels.

Everything runs on Python's arbitrary-precision integers; nothing is ever
rounded.  Determinants use fraction-free (Bareiss) elimination so that all
intermediate values stay integral.  Pfaffians come in two flavours: a
perfect-matching expansion that serves as an oracle on small inputs, and an
exact-rational elimination that scales; the test suite checks the two
against each other and against det = Pf^2.

Matrices carry explicit row/column labels (integers, or tag strings such as
"2-" / "2+") so callers can address entries by the same index sets that
define them.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import combinations
from typing import Callable, Hashable, Iterable, Iterator, Sequence

Label = Hashable

MATCHING_PFAFFIAN_MAX_ORDER = 10


def minus_label(t: int) -> str:
    """Tag for the t-th 'minus' hole index, e.g. minus_label(2) == '2-'."""
    return f"{t}-"


def plus_label(t: int) -> str:
    return f"{t}+"


def binomial(n: int, k: int) -> int:
    """C(n, k), with the convention C(n, k) = 0 for k < 0 or k > n.

    n must be non-negative; out-of-range k is a normal occurrence in the
    summation formulas built on top of this, not an error.
    """
    if n < 0:
        raise ValueError(f"binomial() needs n >= 0, got n={n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def signed_range_sum(f: Callable[[int], int], lo: int, hi: int) -> int:
    """Sum of f(r) for r in [lo, hi], extended to decreasing ranges.

    hi == lo - 1 is the empty sum (0); for hi < lo - 1 the value is the
    negative of the sum over [hi + 1, lo - 1].  With this reading,
    signed_range_sum(f, lo, hi) == -signed_range_sum(f, hi + 1, lo - 1)
    for every pair of bounds.
    """
    if hi >= lo:
        return sum(f(r) for r in range(lo, hi + 1))
    if hi == lo - 1:
        return 0
    return -sum(f(r) for r in range(hi + 1, lo))


# ---------------------------------------------------------------------------
# perfect matchings


def perfect_matchings(count: int) -> Iterator[tuple[tuple[int, int], ...]]:
    """All perfect matchings of {0, .., count-1}, each as ordered pairs.

    The first free index is always matched first, so the iteration order is
    deterministic.
    """
    if count % 2:
        raise ValueError(f"no perfect matchings on an odd set of {count} points")

    def rec(remaining: tuple[int, ...]) -> Iterator[tuple[tuple[int, int], ...]]:
        if not remaining:
            yield ()
            return
        a = remaining[0]
        for idx in range(1, len(remaining)):
            b = remaining[idx]
            rest = remaining[1:idx] + remaining[idx + 1 :]
            for tail in rec(rest):
                yield ((a, b),) + tail

    yield from rec(tuple(range(count)))


def matching_crossings(pairs: Sequence[tuple[int, int]]) -> int:
    """Number of crossing pair quadruples i < j < k < l with i--k, j--l."""
    cr = 0
    for (a, b), (c, d) in combinations(pairs, 2):
        if a < c < b < d or c < a < d < b:
            cr += 1
    return cr


def matching_sign(pairs: Sequence[tuple[int, int]]) -> int:
    return -1 if matching_crossings(pairs) % 2 else 1


# ---------------------------------------------------------------------------
# labeled matrices


class LabeledMatrix:
    """Dense integer matrix addressed by hashable row/column labels.

    Row and column label tuples fix the entry order; all determinant and
    Pfaffian values below depend on that order, so it is part of the value.
    """

    __slots__ = ("row_labels", "col_labels", "rows", "_ri", "_ci")

    def __init__(
        self,
        row_labels: Iterable[Label],
        col_labels: Iterable[Label],
        rows: Iterable[Iterable[int]],
    ) -> None:
        self.row_labels = tuple(row_labels)
        self.col_labels = tuple(col_labels)
        self.rows = [list(r) for r in rows]
        if len(self.rows) != len(self.row_labels):
            raise ValueError("row count does not match row labels")
        for r in self.rows:
            if len(r) != len(self.col_labels):
                raise ValueError("column count does not match column labels")
        self._ri = {lab: i for i, lab in enumerate(self.row_labels)}
        self._ci = {lab: j for j, lab in enumerate(self.col_labels)}
        if len(self._ri) != len(self.row_labels) or len(self._ci) != len(self.col_labels):
            raise ValueError("labels must be unique")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "LabeledMatrix":
        n = len(rows)
        m = len(rows[0]) if rows else 0
        return cls(range(n), range(m), rows)

    @classmethod
    def build(
        cls,
        row_labels: Iterable[Label],
        col_labels: Iterable[Label],
        entry: Callable[[Label, Label], int],
    ) -> "LabeledMatrix":
        row_labels = tuple(row_labels)
        col_labels = tuple(col_labels)
        rows = [[entry(r, c) for c in col_labels] for r in row_labels]
        return cls(row_labels, col_labels, rows)

    # -- access ------------------------------------------------------------

    @property
    def nrows(self) -> int:
        return len(self.row_labels)

    @property
    def ncols(self) -> int:
        return len(self.col_labels)

    @property
    def order(self) -> int:
        if self.nrows != self.ncols:
            raise ValueError("order is defined for square matrices only")
        return self.nrows

    def get(self, row: Label, col: Label) -> int:
        return self.rows[self._ri[row]][self._ci[col]]

    def submatrix(self, row_labels: Iterable[Label], col_labels: Iterable[Label]) -> "LabeledMatrix":
        row_labels = tuple(row_labels)
        col_labels = tuple(col_labels)
        rows = [[self.get(r, c) for c in col_labels] for r in row_labels]
        return LabeledMatrix(row_labels, col_labels, rows)

    def with_labels(self, row_labels: Iterable[Label], col_labels: Iterable[Label]) -> "LabeledMatrix":
        return LabeledMatrix(row_labels, col_labels, self.rows)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LabeledMatrix):
            return NotImplemented
        return (
            self.row_labels == other.row_labels
            and self.col_labels == other.col_labels
            and self.rows == other.rows
        )

    def __repr__(self) -> str:
        return f"LabeledMatrix(rows={self.row_labels!r}, cols={self.col_labels!r}, {self.rows!r})"

    def entries_equal(self, other: "LabeledMatrix") -> bool:
        """Positionwise equality, ignoring the labels."""
        return self.rows == other.rows

    # -- structure checks ----------------------------------------------------

    def skew_violations(self) -> list[str]:
        """Human-readable list of failures of A^t == -A (empty if skew)."""
        if self.nrows != self.ncols:
            return ["matrix is not square"]
        bad = []
        for i in range(self.nrows):
            for j in range(i, self.ncols):
                if self.rows[i][j] != -self.rows[j][i]:
                    bad.append(
                        f"entry ({self.row_labels[i]!r}, {self.col_labels[j]!r}) "
                        f"breaks skew-symmetry"
                    )
        return bad

    def is_skew_symmetric(self) -> bool:
        return not self.skew_violations()


def _require_even_skew(a: LabeledMatrix, what: str) -> None:
    if a.nrows != a.ncols:
        raise ValueError(f"{what} needs a square matrix")
    if a.order % 2:
        raise ValueError(f"{what} needs even order, got {a.order}")
    bad = a.skew_violations()
    if bad:
        raise ValueError(f"{what} needs a skew-symmetric matrix: {bad[0]}")


# ---------------------------------------------------------------------------
# Pfaffians


def pfaffian_by_matchings(a: LabeledMatrix) -> int:
    """Pfaffian as the signed sum over perfect matchings.

    Exponential in the order, so it is capped at order 10; use
    pfaffian_elimination beyond that.  This is the oracle the elimination
    routine is tested against.
    """
    _require_even_skew(a, "pfaffian_by_matchings")
    n = a.order
    if n > MATCHING_PFAFFIAN_MAX_ORDER:
        raise ValueError(
            f"matching expansion capped at order {MATCHING_PFAFFIAN_MAX_ORDER}, got {n}"
        )
    total = 0
    for pairs in perfect_matchings(n):
        term = matching_sign(pairs)
        for i, j in pairs:
            term *= a.rows[i][j]
            if term == 0:
                break
        total += term
    return total


def pfaffian_elimination(a: LabeledMatrix) -> int:
    """Pfaffian by exact-rational skew elimination.

    Works over Fractions and asserts integrality of the result, which is
    guaranteed for integer input.  Agrees with pfaffian_by_matchings
    wherever both run.
    """
    _require_even_skew(a, "pfaffian_elimination")
    n = a.order
    m = [[Fraction(v) for v in row] for row in a.rows]
    result = Fraction(1)
    while n:
        pivot_col = next((j for j in range(1, n) if m[0][j]), None)
        if pivot_col is None:
            return 0
        if pivot_col != 1:
            # swap row/col pivot_col <-> 1; a transposition flips the sign
            m[1], m[pivot_col] = m[pivot_col], m[1]
            for row in m:
                row[1], row[pivot_col] = row[pivot_col], row[1]
            result = -result
        pivot = m[0][1]
        for i in range(2, n):
            mu = m[0][i] / pivot
            if mu:
                for r in range(n):
                    m[r][i] -= mu * m[r][1]
                for c in range(n):
                    m[i][c] -= mu * m[1][c]
        result *= pivot
        m = [row[2:] for row in m[2:]]
        n -= 2
    if result.denominator != 1:
        raise ArithmeticError(f"pfaffian elimination lost exactness: {result}")
    return int(result)


# ---------------------------------------------------------------------------
# determinants


def det_cofactor(rows: Sequence[Sequence[int]]) -> int:
    """Cofactor-expansion determinant; division-free oracle for tiny orders."""
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    total = 0
    sign = 1
    for j in range(n):
        if rows[0][j]:
            minor = [[row[c] for c in range(n) if c != j] for row in rows[1:]]
            total += sign * rows[0][j] * det_cofactor(minor)
        sign = -sign
    return total


def _det_bareiss(rows: list[list[int]]) -> int:
    """Fraction-free elimination; first nonzero pivot in row order."""
    n = len(rows)
    if n == 0:
        return 1
    a = [row[:] for row in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if a[r][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[i][j] * a[k][k] - a[i][k] * a[k][j]
                q, rem = divmod(num, prev)
                if rem:
                    raise ArithmeticError("Bareiss division was not exact")
                a[i][j] = q
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def determinant(a: LabeledMatrix) -> int:
    """Exact determinant (cofactor expansion for tiny orders, else Bareiss)."""
    if a.nrows != a.ncols:
        raise ValueError("determinant needs a square matrix")
    if a.nrows <= 4:
        return det_cofactor(a.rows)
    return _det_bareiss(a.rows)
