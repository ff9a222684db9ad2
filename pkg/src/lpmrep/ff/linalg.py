"""Gaussian elimination over PrimeField / ExtensionField.

Pivots are the first nonzero entry found scanning a column top to bottom,
so reduced forms are reproducible.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from ..errors import DimensionMismatch
from .fields import FieldElement


class FieldMatrix:
    """Immutable r x n matrix whose entries share one field."""

    __slots__ = ("field", "rows")

    def __init__(self, field, entries: Iterable[Iterable]):
        rows = tuple(tuple(field.coerce(v) for v in row) for row in entries)
        if rows and len({len(r) for r in rows}) != 1:
            raise DimensionMismatch("matrix rows have different lengths")
        self.field = field
        self.rows = rows

    @classmethod
    def from_raw(cls, field, rows: Sequence[Sequence]) -> FieldMatrix:
        m = cls.__new__(cls)
        m.field = field
        m.rows = tuple(tuple(r) for r in rows)
        return m

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, ij: tuple[int, int]) -> FieldElement:
        i, j = ij
        return FieldElement(self.field, self.rows[i][j])

    def __eq__(self, other):
        return isinstance(other, FieldMatrix) and self.field == other.field and self.rows == other.rows

    def __hash__(self):
        return hash((self.field, self.rows))

    def __repr__(self):
        body = "; ".join(", ".join(self.field.format_raw(v) for v in row) for row in self.rows)
        return f"FieldMatrix({self.field!r}, [{body}])"

    def to_lists(self) -> list[list[FieldElement]]:
        return [[FieldElement(self.field, v) for v in row] for row in self.rows]

    def column(self, j: int) -> tuple:
        return tuple(row[j] for row in self.rows)

    def columns(self, idx: Iterable[int]) -> FieldMatrix:
        """Submatrix on the given 0-based column indices, in the given order."""
        idx = list(idx)
        return FieldMatrix.from_raw(self.field, [[row[j] for j in idx] for row in self.rows])

    def with_entry(self, i: int, j: int, value) -> FieldMatrix:
        rows = [list(r) for r in self.rows]
        rows[i][j] = self.field.coerce(value)
        return FieldMatrix.from_raw(self.field, rows)

    def rank(self) -> int:
        return rank(self)

    def determinant(self) -> FieldElement:
        return determinant(self)


def _eliminate(field, rows: list[list], ncols: int) -> tuple[int, int, list[int]]:
    """Forward elimination in place.

    Returns (rank, number of row swaps, pivot columns).
    """
    nrows = len(rows)
    is_zero, mul, sub, inv = field.is_zero, field.mul, field.sub, field.inv
    rank = swaps = 0
    pivots = []
    for col in range(ncols):
        if rank == nrows:
            break
        piv = None
        for i in range(rank, nrows):
            if not is_zero(rows[i][col]):
                piv = i
                break
        if piv is None:
            continue
        if piv != rank:
            rows[rank], rows[piv] = rows[piv], rows[rank]
            swaps += 1
        prow = rows[rank]
        pinv = inv(prow[col])
        for i in range(rank + 1, nrows):
            row = rows[i]
            if is_zero(row[col]):
                continue
            factor = mul(row[col], pinv)
            for k in range(col, ncols):
                if not is_zero(prow[k]):
                    row[k] = sub(row[k], mul(factor, prow[k]))
        pivots.append(col)
        rank += 1
    return rank, swaps, pivots


def rank(m: FieldMatrix) -> int:
    rows = [list(r) for r in m.rows]
    return _eliminate(m.field, rows, m.ncols)[0]


def raw_rank(field, rows: Sequence[Sequence], ncols: int) -> int:
    return _eliminate(field, [list(r) for r in rows], ncols)[0]


def determinant(m: FieldMatrix) -> FieldElement:
    n = m.nrows
    if n != m.ncols:
        raise DimensionMismatch(f"determinant needs a square matrix, got {m.nrows}x{m.ncols}")
    field = m.field
    rows = [list(r) for r in m.rows]
    rk, swaps, _ = _eliminate(field, rows, n)
    if rk < n:
        return field.zero
    det = field.raw_one
    for i in range(n):
        det = field.mul(det, rows[i][i])
    if swaps % 2:
        det = field.neg(det)
    return FieldElement(field, det)


def solve(m: FieldMatrix, rhs: Sequence) -> list[FieldElement] | None:
    """One solution x of m x = rhs (free variables set to zero), or None."""
    field = m.field
    b = [field.coerce(v) for v in rhs]
    if len(b) != m.nrows:
        raise DimensionMismatch("right-hand side length differs from row count")
    ncols = m.ncols
    aug = [list(row) + [bi] for row, bi in zip(m.rows, b)]
    rk, _, pivots = _eliminate(field, aug, ncols + 1)
    if pivots and pivots[-1] == ncols:
        return None
    x = [field.raw_zero] * ncols
    for i in range(rk - 1, -1, -1):
        col = pivots[i]
        acc = aug[i][ncols]
        for k in range(col + 1, ncols):
            if not field.is_zero(aug[i][k]):
                acc = field.sub(acc, field.mul(aug[i][k], x[k]))
        x[col] = field.mul(acc, field.inv(aug[i][col]))
    return [FieldElement(field, v) for v in x]
