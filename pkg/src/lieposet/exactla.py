"""Exact dense linear algebra over the rationals or a prime field.

Two fields are supported.  ``RATIONAL`` stores entries as ints/Fractions and
eliminates fraction-free (Bareiss).  ``PrimeField(p)`` stores residues in
``[0, p)`` and uses ordinary Gaussian elimination with modular inverses.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence, Union

from .errors import NonSquare

DEFAULT_PRIME = 2147483647  # 2**31 - 1

Scalar = Union[int, Fraction]


@dataclass(frozen=True)
class Rational:
    def __str__(self) -> str:
        return "rational"


@dataclass(frozen=True)
class PrimeField:
    p: int = DEFAULT_PRIME

    def __str__(self) -> str:
        return f"prime({self.p})"


Field = Union[Rational, PrimeField]
RATIONAL = Rational()


def _normalize(value, field: Field) -> Scalar:
    if isinstance(field, PrimeField):
        if isinstance(value, Fraction):
            num = value.numerator % field.p
            den = value.denominator % field.p
            if den == 0:
                raise ZeroDivisionError(f"denominator {value.denominator} vanishes mod {field.p}")
            return num * pow(den, -1, field.p) % field.p
        return int(value) % field.p
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    if isinstance(value, int):
        return value
    return Fraction(value)


class ExactMatrix:
    """Immutable dense matrix; entries are stored row-major."""

    __slots__ = ("rows", "cols", "field", "_entries")

    def __init__(self, rows: int, cols: int, entries: Iterable, field: Field = RATIONAL):
        entries = tuple(_normalize(x, field) for x in entries)
        if len(entries) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(entries)}")
        self.rows = rows
        self.cols = cols
        self.field = field
        self._entries = entries

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], field: Field = RATIONAL, cols: int | None = None) -> "ExactMatrix":
        if cols is None:
            cols = len(rows[0]) if rows else 0
        flat = []
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged rows")
            flat.extend(r)
        return cls(len(rows), cols, flat, field)

    @classmethod
    def zeros(cls, rows: int, cols: int, field: Field = RATIONAL) -> "ExactMatrix":
        return cls(rows, cols, [0] * (rows * cols), field)

    @classmethod
    def identity(cls, size: int, field: Field = RATIONAL) -> "ExactMatrix":
        return cls(size, size, [int(i == j) for i in range(size) for j in range(size)], field)

    def __getitem__(self, idx: tuple[int, int]) -> Scalar:
        r, c = idx
        return self._entries[r * self.cols + c]

    def row(self, r: int) -> list:
        return list(self._entries[r * self.cols:(r + 1) * self.cols])

    def to_rows(self) -> list[list]:
        return [self.row(r) for r in range(self.rows)]

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(self.cols, self.rows,
                           [self[r, c] for c in range(self.cols) for r in range(self.rows)], self.field)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_skew_symmetric(self) -> bool:
        if not self.is_square():
            return False
        if isinstance(self.field, PrimeField):
            p = self.field.p
            return all((self[i, j] + self[j, i]) % p == 0
                       for i in range(self.rows) for j in range(i, self.rows))
        return all(self[i, j] == -self[j, i] for i in range(self.rows) for j in range(i, self.rows))

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (self.rows, self.cols, self.field, self._entries) == \
            (other.rows, other.cols, other.field, other._entries)

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.field, self._entries))

    def __repr__(self) -> str:
        return f"ExactMatrix({self.rows}x{self.cols}, {self.field})"

    def pretty(self) -> str:
        cells = [[str(x) for x in row] for row in self.to_rows()]
        width = max((len(c) for row in cells for c in row), default=1)
        return "\n".join(" ".join(c.rjust(width) for c in row) for row in cells)


def _integer_rows(m: ExactMatrix) -> tuple[list[list[int]], Fraction]:
    """Clear denominators row by row; return rows and the product of the scale factors."""
    rows = []
    scale = Fraction(1)
    for r in range(m.rows):
        row = m.row(r)
        den = 1
        for x in row:
            if isinstance(x, Fraction):
                den = lcm(den, x.denominator)
        rows.append([int(x * den) for x in row])
        scale *= den
    return rows, scale


def bareiss(rows: list[list[int]]) -> tuple[int, int]:
    """Fraction-free elimination in place.

    Returns ``(rank, sign * last_pivot)``.  The second value is the determinant
    when the matrix is square and of full rank.  Every division is checked to be
    exact; a remainder means the input was not an integer matrix.
    """
    n_rows = len(rows)
    n_cols = len(rows[0]) if rows else 0
    prev = 1
    sign = 1
    rank = 0
    for col in range(n_cols):
        if rank == n_rows:
            break
        piv = next((r for r in range(rank, n_rows) if rows[r][col] != 0), None)
        if piv is None:
            continue
        if piv != rank:
            rows[piv], rows[rank] = rows[rank], rows[piv]
            sign = -sign
        pivot_row = rows[rank]
        p = pivot_row[col]
        for r in range(rank + 1, n_rows):
            row = rows[r]
            f = row[col]
            for c in range(col + 1, n_cols):
                q, rem = divmod(p * row[c] - f * pivot_row[c], prev)
                if rem:
                    raise ArithmeticError("non-integral Bareiss intermediate")
                row[c] = q
            row[col] = 0
        prev = p
        rank += 1
    return rank, sign * prev


def _eliminate_mod(rows: list[list[int]], p: int) -> tuple[int, int]:
    """Gaussian elimination mod p in place; returns (rank, determinant-if-full-rank)."""
    n_rows = len(rows)
    n_cols = len(rows[0]) if rows else 0
    det = 1
    rank = 0
    for col in range(n_cols):
        if rank == n_rows:
            break
        piv = next((r for r in range(rank, n_rows) if rows[r][col]), None)
        if piv is None:
            continue
        if piv != rank:
            rows[piv], rows[rank] = rows[rank], rows[piv]
            det = -det
        pivot_row = rows[rank]
        pv = pivot_row[col]
        det = det * pv % p
        inv = pow(pv, -1, p)
        for r in range(rank + 1, n_rows):
            row = rows[r]
            f = row[col]
            if not f:
                continue
            f = f * inv % p
            for c in range(col + 1, n_cols):
                if pivot_row[c]:
                    row[c] = (row[c] - f * pivot_row[c]) % p
            row[col] = 0
        rank += 1
    return rank, det % p


def rank(m: ExactMatrix) -> int:
    if m.rows == 0 or m.cols == 0:
        return 0
    if isinstance(m.field, PrimeField):
        return _eliminate_mod(m.to_rows(), m.field.p)[0]
    rows, _ = _integer_rows(m)
    return bareiss(rows)[0]


def determinant(m: ExactMatrix) -> Scalar:
    if not m.is_square():
        raise NonSquare(f"determinant of a {m.rows}x{m.cols} matrix")
    if m.rows == 0:
        return 1
    if isinstance(m.field, PrimeField):
        r, det = _eliminate_mod(m.to_rows(), m.field.p)
        return det if r == m.rows else 0
    rows, scale = _integer_rows(m)
    r, det = bareiss(rows)
    if r < m.rows:
        return 0
    return _normalize(Fraction(det) / scale, RATIONAL)


def rank_mod(rows: Sequence[Sequence[int]], p: int) -> int:
    """Rank of an integer matrix given as nested lists, reduced mod p (no copy of caller data)."""
    if not rows or not rows[0]:
        return 0
    return _eliminate_mod([[x % p for x in r] for r in rows], p)[0]


def det_mod(rows: Sequence[Sequence[int]], p: int) -> int:
    if len(rows) == 0:
        return 1
    r, det = _eliminate_mod([[x % p for x in row] for row in rows], p)
    return det if r == len(rows) else 0
