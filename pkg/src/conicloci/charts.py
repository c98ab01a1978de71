"""Affine charts of Gr(4,5) and of the fiber Gr(3,6), and hyperplane pullbacks."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .pluecker import AMBIENT, FIBER, ExteriorVector, label, parse_label, wedge2
from .poly import BASE_VARS, CHART_RING, FIBER_VARS, ParseError, Polynomial, Ring


class ChartError(ValueError):
    """Invalid chart key."""


@dataclass(frozen=True, order=True)
class LambdaChart:
    """Chart of Gr(4,5) where the 4-space Λ is the row space of an identity block
    on four columns plus free entries a, b, c, d in the remaining column."""

    column: int

    def __post_init__(self):
        if self.column not in range(5):
            raise ChartError(f"Λ chart is keyed by its non-pivot column 0..4, got {self.column!r}")

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(c for c in range(5) if c != self.column)

    @property
    def key(self) -> str:
        return str(self.column)

    def matrix(self) -> list[list[Polynomial]]:
        return lambda_matrix(self)


ALL_LAMBDA = tuple(LambdaChart(c) for c in range(5))


def lambda_matrix(chart: LambdaChart | int) -> list[list[Polynomial]]:
    if not isinstance(chart, LambdaChart):
        chart = LambdaChart(chart)
    R = CHART_RING
    rows = []
    for r, p in enumerate(chart.pivots):
        row = [R.zero() for _ in range(5)]
        row[p] = R.one()
        row[chart.column] = R.var(BASE_VARS[r])
        rows.append(row)
    return rows


@dataclass(frozen=True, order=True)
class FChart:
    """Chart of Gr(3, ∧²Λ): identity on three pivot Plücker indices, e..m elsewhere."""

    pivots: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if (len(self.pivots) != 3 or any(p not in FIBER for p in self.pivots)
                or list(self.pivots) != sorted(set(self.pivots), key=FIBER.index)):
            raise ChartError(f"F chart needs 3 distinct sorted fiber indices, got {self.pivots!r}")

    @classmethod
    def parse(cls, text: str) -> "FChart":
        try:
            piv = tuple(parse_label(t) for t in text.replace("{", "").replace("}", "").split(","))
        except ValueError as exc:
            raise ChartError(str(exc)) from None
        if any(p not in FIBER for p in piv):
            raise ChartError(f"fiber indices run over 0..3, got {text!r}")
        return cls(tuple(sorted(piv, key=FIBER.index)))

    @property
    def key(self) -> str:
        return ",".join(label(p) for p in self.pivots)

    @property
    def pivot_columns(self) -> tuple[int, ...]:
        return tuple(FIBER.index(p) for p in self.pivots)

    @property
    def free_columns(self) -> tuple[int, ...]:
        return tuple(c for c in range(6) if c not in self.pivot_columns)

    def matrix(self) -> list[list[Polynomial]]:
        return f_matrix(self)

    def __str__(self):
        return "F{" + self.key + "}"


ALL_F = tuple(FChart(tuple(FIBER[i] for i in cols)) for cols in combinations(range(6), 3))


def as_fchart(x) -> FChart:
    if isinstance(x, FChart):
        return x
    if isinstance(x, str):
        return FChart.parse(x)
    return FChart(tuple(x))


def as_lchart(x) -> LambdaChart:
    if isinstance(x, LambdaChart):
        return x
    try:
        return LambdaChart(int(x))
    except (TypeError, ValueError):
        raise ChartError(f"bad Λ chart {x!r}") from None


def f_matrix(chart: FChart | str) -> list[list[Polynomial]]:
    chart = as_fchart(chart)
    R = CHART_RING
    names = iter(FIBER_VARS)
    rows = []
    for r, pc in enumerate(chart.pivot_columns):
        row = [R.zero() for _ in range(6)]
        row[pc] = R.one()
        for c in chart.free_columns:
            row[c] = R.var(next(names))
        rows.append(row)
    return rows


def basis_wedges(L: Sequence[Sequence]) -> list[ExteriorVector]:
    """u_i ∧ u_j for the rows of a 4×5 matrix, in fiber index order."""
    if len(L) != 4:
        raise ChartError("expected the four rows of a Λ matrix")
    return [wedge2(L[i], L[j]) for i, j in FIBER]


_P_RING = Ring([f"p{label(ij)}" for ij in AMBIENT])


@dataclass(frozen=True)
class Hyperplane:
    """Linear form Σ c_ij p_ij on ∧²Q⁵, rational coefficients in ambient order."""

    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) != 10:
            raise ValueError("a hyperplane needs 10 coefficients")
        if all(c == 0 for c in self.coeffs):
            raise ValueError("the zero form is not a hyperplane")

    @classmethod
    def parse(cls, text: str) -> "Hyperplane":
        p = _P_RING(text)
        coeffs = [Fraction(0)] * 10
        for e, c in p.terms.items():
            if sum(e) != 1:
                raise ParseError(f"hyperplane must be a linear form in p_ij: {text!r}", 0, text)
            coeffs[e.index(1)] = c
        return cls(tuple(coeffs))

    def __call__(self, v: ExteriorVector):
        total = 0
        for c, x in zip(self.coeffs, v.coeffs):
            if c:
                total = total + c * x
        return total

    def __add__(self, other: "Hyperplane") -> "Hyperplane":
        return Hyperplane(tuple(x + y for x, y in zip(self.coeffs, other.coeffs)))

    def scale(self, c) -> "Hyperplane":
        return Hyperplane(tuple(Fraction(c) * x for x in self.coeffs))

    def skew_matrix(self) -> list[list[Fraction]]:
        """The 5×5 skew form Ω with Ω(u, v) = H(u ∧ v)."""
        M = [[Fraction(0)] * 5 for _ in range(5)]
        for (i, j), c in zip(AMBIENT, self.coeffs):
            M[i][j] = c
            M[j][i] = -c
        return M

    def __str__(self):
        return str(Polynomial(_P_RING, {tuple(int(k == n) for k in range(10)): c
                                         for n, c in enumerate(self.coeffs) if c}))


H1 = Hyperplane.parse("p12 - p03")
H2 = Hyperplane.parse("p13 - p24")


@dataclass(frozen=True)
class QLinearForm:
    """Σ c_ij q_ij on ∧²Λ with polynomial coefficients in a..d."""

    coeffs: tuple

    def __call__(self, q: Sequence):
        total = CHART_RING.zero()
        for c, x in zip(self.coeffs, q):
            total = total + c * x
        return total

    def texts(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    def __str__(self):
        parts = []
        for c, ij in zip(self.coeffs, FIBER):
            if not c.is_zero():
                parts.append(f"({c})*q{label(ij)}")
        return " + ".join(parts) or "0"


def pullback(H: Hyperplane, chart: LambdaChart | int) -> QLinearForm:
    """Coefficient at q_ij is H(u_i ∧ u_j) for the rows u of the chart matrix."""
    chart = as_lchart(chart)
    return QLinearForm(tuple(CHART_RING.coerce(H(w)) for w in basis_wedges(lambda_matrix(chart))))
