"""Exact linear algebra over the rationals.

Everything here works on ``fractions.Fraction`` entries; no floating point
is ever involved.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Rational = Fraction


class DimensionError(ValueError):
    """Raised when operand shapes do not fit together."""


def as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


class RatMatrix:
    """Immutable dense matrix with rational entries (row-major)."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable):
        entries = tuple(as_rational(x) for x in entries)
        if len(entries) != rows * cols:
            raise DimensionError(
                f"expected {rows * cols} entries for a {rows}x{cols} matrix, got {len(entries)}"
            )
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "RatMatrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise DimensionError("ragged rows")
        return cls(len(rows), ncols, [x for r in rows for x in r])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RatMatrix":
        return cls(rows, cols, [0] * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls(n, n, [int(i == j) for i in range(n) for j in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def col(self, j: int) -> tuple:
        return self.entries[j::self.cols]

    def to_rows(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "RatMatrix":
        return RatMatrix(self.cols, self.rows,
                         [self[i, j] for j in range(self.cols) for i in range(self.rows)])

    def __matmul__(self, other):
        if isinstance(other, RatMatrix):
            if self.cols != other.rows:
                raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
            return RatMatrix(self.rows, other.cols, [
                sum((self[i, k] * other[k, j] for k in range(self.cols)), Fraction(0))
                for i in range(self.rows) for j in range(other.cols)
            ])
        v = [as_rational(x) for x in other]
        if len(v) != self.cols:
            raise DimensionError(f"vector of length {len(v)} does not fit {self.shape}")
        return [sum((self[i, k] * v[k] for k in range(self.cols)), Fraction(0))
                for i in range(self.rows)]

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "RatMatrix":
        return RatMatrix(len(rows), len(cols), [self[i, j] for i in rows for j in cols])

    def is_skew(self) -> bool:
        return self.rows == self.cols and all(
            self[i, j] == -self[j, i] for i in range(self.rows) for j in range(self.rows))

    def __eq__(self, other):
        return (isinstance(other, RatMatrix) and self.shape == other.shape
                and self.entries == other.entries)

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in self.row(i)) for i in range(self.rows))
        return f"RatMatrix({self.rows}x{self.cols}: {body})"


def _rref(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    m = [list(r) for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m[:r], pivots


def rref(M: RatMatrix) -> RatMatrix:
    reduced, _ = _rref(M.to_rows())
    if not reduced:
        return RatMatrix(0, M.cols, [])
    return RatMatrix.from_rows(reduced)


def rank(M: RatMatrix) -> int:
    if M.rows == 0 or M.cols == 0:
        return 0
    return len(_rref(M.to_rows())[1])


def kernel(M: RatMatrix) -> list[list[Fraction]]:
    """Basis of the right null space, in reduced echelon normal form.

    The returned vectors are the rows of the unique reduced row echelon
    matrix whose row space is ker M, so two matrices with the same kernel
    give literally equal output.
    """
    if M.rows == 0:
        basis = [[Fraction(int(i == j)) for j in range(M.cols)] for i in range(M.cols)]
        return basis
    reduced, pivots = _rref(M.to_rows())
    free = [c for c in range(M.cols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * M.cols
        v[f] = Fraction(1)
        for row, p in zip(reduced, pivots):
            v[p] = -row[f]
        basis.append(v)
    if not basis:
        return []
    canon, _ = _rref(basis)
    return canon


def row_space(vectors: Sequence[Sequence]) -> list[list[Fraction]]:
    """Canonical (reduced echelon) basis of the span of ``vectors``."""
    vectors = [[as_rational(x) for x in v] for v in vectors]
    if not vectors:
        return []
    return _rref(vectors)[0]


def intersect_spaces(U: Sequence[Sequence], W: Sequence[Sequence]) -> list[list[Fraction]]:
    """Canonical basis of span(U) ∩ span(W), both given by spanning rows."""
    U = row_space(U)
    W = row_space(W)
    if not U or not W:
        return []
    n = len(U[0])
    # x·U = y·W  <=>  (x, -y) in the left kernel of [U; W]
    stacked = RatMatrix.from_rows(U + W).transpose()
    out = []
    for v in kernel(stacked):
        coeffs = v[:len(U)]
        out.append([sum((c * U[k][j] for k, c in enumerate(coeffs)), Fraction(0))
                    for j in range(n)])
    return row_space(out)


def det(M: RatMatrix) -> Fraction:
    if M.rows != M.cols:
        raise DimensionError(f"determinant of non-square {M.shape} matrix")
    m = M.to_rows()
    n = M.rows
    result = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if m[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            result = -result
        result *= m[c][c]
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = m[i][c] / m[c][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return result


def cross3(u: Sequence, v: Sequence) -> list:
    """Cross product in dimension 3; entries may be rationals or polynomials."""
    if len(u) != 3 or len(v) != 3:
        raise DimensionError(f"cross product needs two 3-vectors, got lengths {len(u)}, {len(v)}")
    return [u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0]]


def dot(u: Sequence, v: Sequence):
    if len(u) != len(v):
        raise DimensionError(f"dot product of lengths {len(u)} and {len(v)}")
    total = 0
    for x, y in zip(u, v):
        total = total + x * y
    return total
