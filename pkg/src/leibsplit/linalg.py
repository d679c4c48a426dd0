"""Exact rational vectors and matrices.

Everything is a ``fractions.Fraction``; there is no floating point anywhere in the
package. Elimination is ordinary Gaussian elimination taking the first nonzero
entry of a column as pivot, which keeps every result deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from leibsplit.errors import DimensionMismatch, SingularMatrix

Scalar = Fraction | int


def _as_fractions(values: Iterable[Scalar]) -> tuple[Fraction, ...]:
    return tuple(Fraction(v) for v in values)


@dataclass(frozen=True)
class Vector:
    """Coordinate column of fixed length."""

    entries: tuple[Fraction, ...]

    @classmethod
    def of(cls, values: Iterable[Scalar]) -> Vector:
        return cls(_as_fractions(values))

    @classmethod
    def zero(cls, dim: int) -> Vector:
        return cls((Fraction(0),) * dim)

    @classmethod
    def basis(cls, dim: int, index: int) -> Vector:
        return cls(tuple(Fraction(1 if i == index else 0) for i in range(dim)))

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.entries)

    def __getitem__(self, index: int) -> Fraction:
        return self.entries[index]

    def _check(self, other: Vector) -> None:
        if len(other) != len(self):
            raise DimensionMismatch(f"vector lengths {len(self)} and {len(other)}")

    def __add__(self, other: Vector) -> Vector:
        self._check(other)
        return Vector(tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: Vector) -> Vector:
        self._check(other)
        return Vector(tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> Vector:
        return Vector(tuple(-a for a in self.entries))

    def scale(self, c: Scalar) -> Vector:
        c = Fraction(c)
        return Vector(tuple(c * a for a in self.entries))

    def dot(self, other: Vector) -> Fraction:
        """Standard pairing; also used for ⟨a*, x⟩ between A* and A."""
        self._check(other)
        return sum((a * b for a, b in zip(self.entries, other.entries)), Fraction(0))

    def concat(self, other: Vector) -> Vector:
        return Vector(self.entries + other.entries)

    def is_zero(self) -> bool:
        return not any(self.entries)


@dataclass(frozen=True)
class Matrix:
    """Dense ``n_rows × n_cols`` grid of rationals."""

    rows: tuple[tuple[Fraction, ...], ...]
    n_cols: int

    def __post_init__(self) -> None:
        for row in self.rows:
            if len(row) != self.n_cols:
                raise DimensionMismatch("matrix rows of unequal length")

    @classmethod
    def of(cls, rows: Sequence[Sequence[Scalar]], n_cols: int | None = None) -> Matrix:
        if n_cols is None:
            n_cols = len(rows[0]) if rows else 0
        return cls(tuple(_as_fractions(row) for row in rows), n_cols)

    @classmethod
    def zeros(cls, n_rows: int, n_cols: int) -> Matrix:
        return cls(tuple((Fraction(0),) * n_cols for _ in range(n_rows)), n_cols)

    @classmethod
    def identity(cls, n: int) -> Matrix:
        return cls(
            tuple(tuple(Fraction(1 if i == j else 0) for j in range(n)) for i in range(n)),
            n,
        )

    @classmethod
    def from_columns(cls, columns: Sequence[Vector], n_rows: int) -> Matrix:
        return cls(
            tuple(tuple(col[i] for col in columns) for i in range(n_rows)),
            len(columns),
        )

    @classmethod
    def block(cls, grid: Sequence[Sequence[Matrix]]) -> Matrix:
        """Assemble a block matrix; blocks in a row must share their height."""
        rows: list[tuple[Fraction, ...]] = []
        for block_row in grid:
            height = block_row[0].n_rows
            for r in range(height):
                rows.append(tuple(x for blk in block_row for x in blk.rows[r]))
        n_cols = sum(blk.n_cols for blk in grid[0])
        return cls(tuple(rows), n_cols)

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return self.n_rows, self.n_cols

    def is_square(self) -> bool:
        return self.n_rows == self.n_cols

    def __getitem__(self, index: tuple[int, int]) -> Fraction:
        i, j = index
        return self.rows[i][j]

    def column(self, j: int) -> Vector:
        return Vector(tuple(row[j] for row in self.rows))

    def transpose(self) -> Matrix:
        return Matrix(
            tuple(tuple(row[j] for row in self.rows) for j in range(self.n_cols)),
            self.n_rows,
        )

    def _check_same_shape(self, other: Matrix) -> None:
        if self.shape != other.shape:
            raise DimensionMismatch(f"matrix shapes {self.shape} and {other.shape}")

    def __add__(self, other: Matrix) -> Matrix:
        self._check_same_shape(other)
        return Matrix(
            tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)),
            self.n_cols,
        )

    def __sub__(self, other: Matrix) -> Matrix:
        self._check_same_shape(other)
        return Matrix(
            tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)),
            self.n_cols,
        )

    def __neg__(self) -> Matrix:
        return Matrix(tuple(tuple(-a for a in row) for row in self.rows), self.n_cols)

    def scale(self, c: Scalar) -> Matrix:
        c = Fraction(c)
        return Matrix(tuple(tuple(c * a for a in row) for row in self.rows), self.n_cols)

    def apply(self, v: Vector) -> Vector:
        if len(v) != self.n_cols:
            raise DimensionMismatch(f"matrix {self.shape} applied to vector of length {len(v)}")
        return Vector(
            tuple(
                sum((a * b for a, b in zip(row, v.entries) if a and b), Fraction(0))
                for row in self.rows
            )
        )

    def __matmul__(self, other: Matrix) -> Matrix:
        if self.n_cols != other.n_rows:
            raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
        cols = [other.column(j) for j in range(other.n_cols)]
        return Matrix.from_columns([self.apply(c) for c in cols], self.n_rows)

    def is_zero(self) -> bool:
        return not any(any(row) for row in self.rows)


def _row_reduce(rows: list[list[Fraction]], n_cols: int) -> list[int]:
    """Reduce ``rows`` in place to reduced row echelon form; return pivot columns."""
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        lead = rows[r][c]
        rows[r] = [x / lead for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                factor = rows[i][c]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return pivots


def rank(m: Matrix) -> int:
    """Exact rank."""
    rows = [list(row) for row in m.rows]
    return len(_row_reduce(rows, m.n_cols))


def solve_linear(m: Matrix, b: Vector) -> Vector:
    """Unique solution of ``m · x = b`` for square invertible ``m``."""
    if not m.is_square():
        raise DimensionMismatch(f"solve_linear needs a square matrix, got {m.shape}")
    n = m.n_rows
    if len(b) != n:
        raise DimensionMismatch(f"right-hand side has length {len(b)}, expected {n}")
    augmented = [list(row) + [b[i]] for i, row in enumerate(m.rows)]
    pivots = _row_reduce(augmented, n)
    if len(pivots) < n:
        raise SingularMatrix(f"matrix of rank {len(pivots)} < {n}")
    return Vector(tuple(row[n] for row in augmented))


def invert(m: Matrix) -> Matrix:
    """Exact inverse."""
    if not m.is_square():
        raise DimensionMismatch(f"cannot invert a {m.shape} matrix")
    n = m.n_rows
    identity = Matrix.identity(n)
    augmented = [list(row) + list(identity.rows[i]) for i, row in enumerate(m.rows)]
    pivots = _row_reduce(augmented, n)
    if len(pivots) < n:
        raise SingularMatrix(f"matrix of rank {len(pivots)} < {n}")
    return Matrix(tuple(tuple(row[n:]) for row in augmented), n)
