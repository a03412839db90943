"""Exact rational linear algebra.

Scalars are ``fractions.Fraction`` (always in lowest terms, positive
denominator).  Matrices are immutable, row-major and dense.  Elimination
picks the first nonzero entry scanning each column top to bottom, columns
left to right, so every basis this module returns is reproducible bit for
bit.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .exceptions import DimensionMismatch, DocumentError, SubspaceViolation

logger = logging.getLogger(__name__)

Vector = tuple[Fraction, ...]

ZERO = Fraction(0)
ONE = Fraction(1)

# "p" or "p/q" with an optional leading minus on p only
_RATIONAL_RE = re.compile(r"^\s*(-?\d+)(?:\s*/\s*(\d+))?\s*$")


# ---------------------------------------------------------------------------
# Scalars and vectors
# ---------------------------------------------------------------------------

def parse_rational(value: object, field: str = "value") -> Fraction:
    """Parse a rational from ``"p/q"``, ``"p"`` or an int.

    Floats and booleans are rejected: a float has already lost exactness.
    The Unicode minus sign is accepted in place of ``-``.

    Raises:
        DocumentError: If *value* is not an exact rational literal.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or isinstance(value, float):
        raise DocumentError(field, f"expected a rational string, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if not isinstance(value, str):
        raise DocumentError(field, f"expected a rational string, got {type(value).__name__}")
    match = _RATIONAL_RE.match(value.replace("−", "-"))
    if match is None:
        raise DocumentError(field, f"malformed rational {value!r}")
    numerator, denominator = match.group(1), match.group(2)
    if denominator is not None and int(denominator) == 0:
        raise DocumentError(field, f"zero denominator in {value!r}")
    return Fraction(int(numerator), int(denominator or 1))


def format_rational(q: Fraction | int) -> str:
    """Render *q* as ``"p"`` or ``"p/q"``."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def zero_vector(n: int) -> Vector:
    return (ZERO,) * n


def unit_vector(n: int, k: int) -> Vector:
    return tuple(ONE if i == k else ZERO for i in range(n))


def add_vectors(x: Sequence[Fraction], y: Sequence[Fraction]) -> Vector:
    if len(x) != len(y):
        raise DimensionMismatch("add_vectors", f"lengths {len(x)} and {len(y)}")
    return tuple(a + b for a, b in zip(x, y))


def sub_vectors(x: Sequence[Fraction], y: Sequence[Fraction]) -> Vector:
    if len(x) != len(y):
        raise DimensionMismatch("sub_vectors", f"lengths {len(x)} and {len(y)}")
    return tuple(a - b for a, b in zip(x, y))


def scale_vector(c: Fraction | int, x: Sequence[Fraction]) -> Vector:
    return tuple(c * a for a in x)


def is_zero_vector(x: Sequence[Fraction]) -> bool:
    return all(a == 0 for a in x)


# ---------------------------------------------------------------------------
# Matrices
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RationalMatrix:
    """Dense rational matrix; ``entries`` holds ``rows * cols`` values row by row."""

    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise DimensionMismatch("RationalMatrix", "negative shape")
        if len(self.entries) != self.rows * self.cols:
            raise DimensionMismatch(
                "RationalMatrix",
                f"{len(self.entries)} entries for shape {self.rows}x{self.cols}",
            )

    # -- construction -------------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Fraction | int]], cols: int | None = None) -> RationalMatrix:
        """Build from a list of rows.  *cols* is needed only when there are no rows."""
        n_cols = len(rows[0]) if rows else (cols or 0)
        if any(len(row) != n_cols for row in rows):
            raise DimensionMismatch("RationalMatrix.from_rows", "ragged rows")
        return cls(len(rows), n_cols, tuple(Fraction(x) for row in rows for x in row))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[Fraction]], rows: int) -> RationalMatrix:
        """Build from column vectors of length *rows*."""
        if any(len(col) != rows for col in columns):
            raise DimensionMismatch("RationalMatrix.from_columns", "ragged columns")
        return cls(rows, len(columns), tuple(Fraction(columns[j][i]) for i in range(rows) for j in range(len(columns))))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> RationalMatrix:
        return cls(rows, cols, (ZERO,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> RationalMatrix:
        return cls(n, n, tuple(ONE if i == j else ZERO for i in range(n) for j in range(n)))

    @classmethod
    def diagonal(cls, values: Sequence[Fraction | int]) -> RationalMatrix:
        n = len(values)
        return cls(n, n, tuple(Fraction(values[i]) if i == j else ZERO for i in range(n) for j in range(n)))

    # -- access -------------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, index: tuple[int, int]) -> Fraction:
        i, j = index
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> Vector:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def columns(self) -> list[Vector]:
        return [self.column(j) for j in range(self.cols)]

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.entries)

    def is_square(self) -> bool:
        return self.rows == self.cols

    # -- arithmetic ---------------------------------------------------------

    def transpose(self) -> RationalMatrix:
        return RationalMatrix(self.cols, self.rows, tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)))

    def apply(self, x: Sequence[Fraction]) -> Vector:
        """Return ``self · x`` for a column vector *x*."""
        if len(x) != self.cols:
            raise DimensionMismatch("RationalMatrix.apply", f"vector of length {len(x)} for {self.rows}x{self.cols}")
        support = [(j, xj) for j, xj in enumerate(x) if xj != 0]
        return tuple(sum((self.entries[i * self.cols + j] * xj for j, xj in support), ZERO) for i in range(self.rows))

    def __matmul__(self, other: RationalMatrix) -> RationalMatrix:
        if self.cols != other.rows:
            raise DimensionMismatch("RationalMatrix.__matmul__", f"{self.shape} @ {other.shape}")
        cols = other.columns()
        product = [self.apply(col) for col in cols]
        return RationalMatrix.from_columns(product, self.rows)

    def __add__(self, other: RationalMatrix) -> RationalMatrix:
        if self.shape != other.shape:
            raise DimensionMismatch("RationalMatrix.__add__", f"{self.shape} + {other.shape}")
        return RationalMatrix(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: RationalMatrix) -> RationalMatrix:
        if self.shape != other.shape:
            raise DimensionMismatch("RationalMatrix.__sub__", f"{self.shape} - {other.shape}")
        return RationalMatrix(self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> RationalMatrix:
        return RationalMatrix(self.rows, self.cols, tuple(-a for a in self.entries))

    def scale(self, c: Fraction | int) -> RationalMatrix:
        return RationalMatrix(self.rows, self.cols, tuple(c * a for a in self.entries))

    def hstack(self, other: RationalMatrix) -> RationalMatrix:
        if self.rows != other.rows:
            raise DimensionMismatch("RationalMatrix.hstack", f"{self.shape} | {other.shape}")
        return RationalMatrix.from_columns(self.columns() + other.columns(), self.rows)

    def vstack(self, other: RationalMatrix) -> RationalMatrix:
        if self.cols != other.cols:
            raise DimensionMismatch("RationalMatrix.vstack", f"{self.shape} / {other.shape}")
        return RationalMatrix(self.rows + other.rows, self.cols, self.entries + other.entries)

    def __str__(self) -> str:
        return "[" + ", ".join("[" + ", ".join(format_rational(x) for x in self.row(i)) + "]" for i in range(self.rows)) + "]"


def block_diagonal(a: RationalMatrix, b: RationalMatrix) -> RationalMatrix:
    """Return ``a ⊕ b``."""
    rows = [list(a.row(i)) + [ZERO] * b.cols for i in range(a.rows)]
    rows += [[ZERO] * a.cols + list(b.row(i)) for i in range(b.rows)]
    return RationalMatrix.from_rows(rows, cols=a.cols + b.cols)


def commutator(a: RationalMatrix, b: RationalMatrix) -> RationalMatrix:
    return a @ b - b @ a


# ---------------------------------------------------------------------------
# Elimination
# ---------------------------------------------------------------------------

def rref(m: RationalMatrix) -> tuple[RationalMatrix, list[int]]:
    """Return the reduced row-echelon form of *m* and its pivot columns."""
    work = m.to_rows()
    pivots: list[int] = []
    pivot_row = 0
    for col in range(m.cols):
        if pivot_row == m.rows:
            break
        # First nonzero entry at or below the current pivot row
        found = next((r for r in range(pivot_row, m.rows) if work[r][col] != 0), None)
        if found is None:
            continue
        work[pivot_row], work[found] = work[found], work[pivot_row]
        inv = ONE / work[pivot_row][col]
        work[pivot_row] = [x * inv for x in work[pivot_row]]
        for r in range(m.rows):
            factor = work[r][col]
            if r != pivot_row and factor != 0:
                work[r] = [x - factor * y for x, y in zip(work[r], work[pivot_row])]
        pivots.append(col)
        pivot_row += 1
    return RationalMatrix.from_rows(work, cols=m.cols), pivots


def rank(m: RationalMatrix) -> int:
    return len(rref(m)[1])


def nullspace_basis(m: RationalMatrix) -> list[Vector]:
    """Return a basis of ``{x : m·x = 0}``, one vector per free column."""
    reduced, pivots = rref(m)
    pivot_set = set(pivots)
    basis: list[Vector] = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        x = [ZERO] * m.cols
        x[free] = ONE
        for row, col in enumerate(pivots):
            x[col] = -reduced[row, free]
        basis.append(tuple(x))
    logger.debug("nullspace of %dx%d matrix has dimension %d", m.rows, m.cols, len(basis))
    return basis


def column_space_basis(m: RationalMatrix) -> list[Vector]:
    """Return the pivot columns of *m*, a basis of its column space."""
    _, pivots = rref(m)
    return [m.column(j) for j in pivots]


def in_column_space(m: RationalMatrix, v: Sequence[Fraction]) -> bool:
    return solve(m, v) is not None


def solve(m: RationalMatrix, b: Sequence[Fraction]) -> Vector | None:
    """Return one solution of ``m·x = b`` (free variables set to zero), or None."""
    if len(b) != m.rows:
        raise DimensionMismatch("solve", f"right-hand side of length {len(b)} for {m.rows} rows")
    augmented = m.hstack(RationalMatrix.from_columns([tuple(b)], m.rows))
    reduced, pivots = rref(augmented)
    if pivots and pivots[-1] == m.cols:
        return None
    x = [ZERO] * m.cols
    for row, col in enumerate(pivots):
        x[col] = reduced[row, m.cols]
    return tuple(x)


def inverse(m: RationalMatrix) -> RationalMatrix:
    """Return the inverse of a square matrix.

    Raises:
        DimensionMismatch: If *m* is not square or is singular.
    """
    if not m.is_square():
        raise DimensionMismatch("inverse", f"matrix of shape {m.shape} is not square")
    n = m.rows
    reduced, pivots = rref(m.hstack(RationalMatrix.identity(n)))
    if pivots[:n] != list(range(n)):
        raise DimensionMismatch("inverse", "matrix is singular")
    return RationalMatrix.from_rows([list(reduced.row(i)[n:]) for i in range(n)], cols=n)


def quotient_dim(big: RationalMatrix, small: RationalMatrix) -> int:
    """Return ``dim span(big) − dim span(small)`` after checking containment.

    Raises:
        SubspaceViolation: If a column of *small* lies outside span(big).
    """
    big_rank = rank(big)
    for j, col in enumerate(small.columns()):
        if rank(big.hstack(RationalMatrix.from_columns([col], big.rows))) != big_rank:
            raise SubspaceViolation("quotient_dim", j)
    return big_rank - rank(small)


def extend_to_basis(fixed: Iterable[Vector], candidates: Iterable[Vector], length: int) -> list[Vector]:
    """Greedily pick candidates that raise the rank of *fixed*.

    Returns the chosen candidates in input order.  Used to pick cohomology
    representatives: *fixed* spans the coboundaries, *candidates* the cocycles.
    """
    current = list(fixed)
    current_rank = rank(RationalMatrix.from_columns(current, length)) if current else 0
    chosen: list[Vector] = []
    for vec in candidates:
        trial = RationalMatrix.from_columns(current + [vec], length)
        trial_rank = rank(trial)
        if trial_rank > current_rank:
            current.append(vec)
            current_rank = trial_rank
            chosen.append(vec)
    return chosen
