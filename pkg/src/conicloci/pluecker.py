"""Second exterior powers, Plücker coordinates and Cauchy–Binet.

Entries may be rationals or polynomials; everything is computed with
plain ``+``, ``-`` and ``*`` so both work.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .exactmath import DimensionError, RatMatrix, cross3, dot
from .poly import Polynomial, det as poly_det


def pairs(n: int) -> tuple[tuple[int, int], ...]:
    """Increasing pairs (i, j), 0 <= i < j < n, in lexicographic order."""
    return tuple(combinations(range(n), 2))


AMBIENT = pairs(5)   # 01 02 03 04 12 13 14 23 24 34
FIBER = pairs(4)     # 01 02 03 12 13 23


def label(ij: tuple[int, int]) -> str:
    return f"{ij[0]}{ij[1]}"


def parse_label(text: str) -> tuple[int, int]:
    text = text.strip()
    if len(text) != 2 or not text.isdigit() or text[0] >= text[1]:
        raise ValueError(f"bad Plücker index {text!r}")
    return (int(text[0]), int(text[1]))


def _is_zero(x) -> bool:
    return x.is_zero() if isinstance(x, Polynomial) else x == 0


@dataclass(frozen=True)
class ExteriorVector:
    """Element of ∧²Qⁿ in the basis e_i∧e_j (i<j), n = ``dim``."""

    dim: int
    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) != len(pairs(self.dim)):
            raise DimensionError(f"∧² of Q^{self.dim} needs {len(pairs(self.dim))} coefficients")

    @classmethod
    def basis(cls, dim: int, i: int, j: int) -> "ExteriorVector":
        sign = 1
        if i > j:
            i, j, sign = j, i, -1
        return cls(dim, tuple(sign if p == (i, j) else 0 for p in pairs(dim)))

    @property
    def index(self) -> tuple[tuple[int, int], ...]:
        return pairs(self.dim)

    def __getitem__(self, ij):
        if isinstance(ij, str):
            ij = parse_label(ij)
        i, j = ij
        if i == j:
            return 0
        if i > j:
            return -self.coeffs[self.index.index((j, i))]
        return self.coeffs[self.index.index((i, j))]

    def as_dict(self) -> dict[str, object]:
        return {label(p): c for p, c in zip(self.index, self.coeffs)}

    def __add__(self, other: "ExteriorVector") -> "ExteriorVector":
        return ExteriorVector(self.dim, tuple(x + y for x, y in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "ExteriorVector") -> "ExteriorVector":
        return ExteriorVector(self.dim, tuple(x - y for x, y in zip(self.coeffs, other.coeffs)))

    def scale(self, c) -> "ExteriorVector":
        return ExteriorVector(self.dim, tuple(c * x for x in self.coeffs))

    def is_zero(self) -> bool:
        return all(_is_zero(x) for x in self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, ExteriorVector) or other.dim != self.dim:
            return NotImplemented
        return all(_is_zero(x - y) for x, y in zip(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash((self.dim, self.coeffs))


def wedge2(u: Sequence, v: Sequence) -> ExteriorVector:
    """u ∧ v; the coefficient at (i, j) is u_i v_j - u_j v_i."""
    if len(u) != len(v):
        raise DimensionError(f"wedge of lengths {len(u)} and {len(v)}")
    return ExteriorVector(len(u), tuple(u[i] * v[j] - u[j] * v[i] for i, j in pairs(len(u))))


def plucker_of_rowspace(M) -> list:
    """Maximal minors of a k×n matrix, column subsets in lexicographic order."""
    rows = M.to_rows() if isinstance(M, RatMatrix) else [list(r) for r in M]
    k = len(rows)
    n = len(rows[0]) if rows else 0
    if k > n:
        raise DimensionError(f"{k}x{n} matrix has no maximal minors")
    out = []
    for cols in combinations(range(n), k):
        out.append(poly_det([[r[c] for c in cols] for r in rows]))
    return out


def cauchy_binet_det(A, B) -> Fraction:
    """det(AB) for A 2×3, B 3×2, as (row0 A × row1 A)·(col0 B × col1 B)."""
    A = A if isinstance(A, RatMatrix) else RatMatrix.from_rows(A)
    B = B if isinstance(B, RatMatrix) else RatMatrix.from_rows(B)
    if A.shape != (2, 3) or B.shape != (3, 2):
        raise DimensionError(f"need 2x3 and 3x2, got {A.shape} and {B.shape}")
    return dot(cross3(A.row(0), A.row(1)), cross3(B.col(0), B.col(1)))


def cauchy_binet_general(A, B):
    """Σ_S det A[:, S] det B[S, :] over k-subsets S of the inner index."""
    A = A.to_rows() if isinstance(A, RatMatrix) else [list(r) for r in A]
    B = B.to_rows() if isinstance(B, RatMatrix) else [list(r) for r in B]
    k, n = len(A), len(B)
    if any(len(r) != n for r in A) or any(len(r) != k for r in B):
        raise DimensionError("shapes do not fit k×n by n×k")
    total = 0
    for S in combinations(range(n), k):
        total = total + poly_det([[r[s] for s in S] for r in A]) * poly_det([B[s] for s in S])
    return total


def plucker_relation(v: ExteriorVector):
    """q01 q23 - q02 q13 + q03 q12 for a fiber (dim 4) vector."""
    if v.dim != 4:
        raise DimensionError("the Gr(2,4) relation needs a 6-coordinate vector")
    q = v.as_dict()
    return q["01"] * q["23"] - q["02"] * q["13"] + q["03"] * q["12"]


def plucker_relation_ok(v: ExteriorVector) -> bool:
    return _is_zero(plucker_relation(v))


def plucker_relations(v: ExteriorVector) -> list:
    """All three-term relations p_ij p_kl - p_ik p_jl + p_il p_jk, i<j<k<l."""
    return [v[i, j] * v[k, l] - v[i, k] * v[j, l] + v[i, l] * v[j, k]
            for i, j, k, l in combinations(range(v.dim), 4)]


def is_decomposable(v: ExteriorVector) -> bool:
    return all(_is_zero(r) for r in plucker_relations(v))
