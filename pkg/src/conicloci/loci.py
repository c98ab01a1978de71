"""The chart ideals I_S(Y), I_T(G), I_T(Y) and the set-theoretic fiber checks.

Planes in Gr(2, Λ) come in two families.  A σ31-plane is x ∧ Λ for a
vertex x ∈ PΛ; a σ22-plane is ∧²V3 for a 3-space V3 ⊂ Λ.  Both are
parameterized here by the four standard affine charts of P³ (resp. of
Gr(3,4)), with parameters al, be, ga.  Since these charts cover, T ∩ F-chart
is the union over shapes of the closures of the parameterized images, and
each closure is an elimination ideal.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from pathlib import Path
from typing import Sequence

from . import exactmath as xm
from .charts import (ALL_LAMBDA, FChart, H1, H2, Hyperplane, LambdaChart, QLinearForm,
                     as_fchart, as_lchart, f_matrix, lambda_matrix, pullback)
from .groebner import (Ideal, ReducednessCertificate, certify_reduced, eliminate,
                       intersect, is_unit)
from .pluecker import FIBER, ExteriorVector, cauchy_binet_general, wedge2
from .poly import BASE_VARS, CHART_RING, PARAM_VARS, Polynomial, det as poly_det

ELIM_RING = CHART_RING.extend(["z"])
_SHAPE_PARAMS = ("al", "be", "ga")
_DROP = PARAM_VARS + ("z",)


class PlaneType(str, enum.Enum):
    SIGMA31 = "s31"
    SIGMA22 = "s22"

    @classmethod
    def parse(cls, text: str) -> "PlaneType":
        aliases = {"s31": cls.SIGMA31, "sigma31": cls.SIGMA31,
                   "s22": cls.SIGMA22, "sigma22": cls.SIGMA22}
        try:
            return aliases[str(text).lower()]
        except KeyError:
            raise ValueError(f"unknown plane type {text!r}") from None

    def __str__(self):
        return "sigma31" if self is PlaneType.SIGMA31 else "sigma22"


@dataclass(frozen=True)
class PlaneParam:
    """One affine parameter chart of a plane family.

    For sigma22 ``data`` is the 3×4 matrix R; for sigma31 it is the vertex x,
    both in Λ-row coordinates.  ``pivots`` records the identity positions.
    """

    ptype: PlaneType
    pivots: tuple
    data: tuple

    @property
    def label(self) -> str:
        return f"{self.ptype}[{''.join(map(str, self.pivots))}]"

    def span(self) -> list[list[Polynomial]]:
        if self.ptype is PlaneType.SIGMA22:
            return sigma22_span(self.data)
        return sigma31_span(self.data)


def plane_shapes(ptype: PlaneType) -> list[PlaneParam]:
    R = CHART_RING
    params = [R.var(n) for n in _SHAPE_PARAMS]
    shapes = []
    if ptype is PlaneType.SIGMA22:
        for pivots in combinations(range(4), 3):
            free = next(c for c in range(4) if c not in pivots)
            rows = []
            for r, p in enumerate(pivots):
                row = [R.zero()] * 4
                row[p] = R.one()
                row[free] = params[r]
                rows.append(tuple(row))
            shapes.append(PlaneParam(ptype, pivots, tuple(rows)))
    else:
        for p in range(4):
            it = iter(params)
            x = tuple(R.one() if k == p else next(it) for k in range(4))
            shapes.append(PlaneParam(ptype, (p,), x))
    return shapes


def _unit_position(x: Sequence) -> int:
    for k, v in enumerate(x):
        v = CHART_RING.coerce(v)
        if v.is_constant() and v.constant_value() == 1:
            return k
    raise ValueError(f"vertex {list(map(str, x))} has no entry equal to 1")


def sigma31_span(x: Sequence) -> list[list[Polynomial]]:
    """Rows x ∧ ε_j (j ≠ p) in q-coordinates, with p the first entry equal to 1.

    Each row is scaled so its entry at q_{pj} (or q_{jp}) is +1.
    """
    x = [CHART_RING.coerce(v) for v in x]
    if len(x) != 4:
        raise xm.DimensionError("a vertex in PΛ has 4 coordinates")
    p = _unit_position(x)
    rows = []
    for j in range(4):
        if j == p:
            continue
        eps = [CHART_RING.one() if k == j else CHART_RING.zero() for k in range(4)]
        w = wedge2(x, eps)
        sign = 1 if p < j else -1
        rows.append([sign * c for c in w.coeffs])
    return rows


def sigma22_span(R: Sequence[Sequence]) -> list[list[Polynomial]]:
    """Rows r0∧r1, r0∧r2, r1∧r2 of a 3×4 matrix R, in q-coordinates."""
    R = [[CHART_RING.coerce(v) for v in row] for row in R]
    if len(R) != 3 or any(len(r) != 4 for r in R):
        raise xm.DimensionError("sigma22 data is a 3x4 matrix")
    return [list(wedge2(R[i], R[j]).coeffs) for i, j in ((0, 1), (0, 2), (1, 2))]


# ---------------------------------------------------------------- varieties

@dataclass(frozen=True)
class VarietySpec:
    name: str
    hyperplanes: tuple = ()

    def __post_init__(self):
        if self.hyperplanes:
            M = xm.RatMatrix.from_rows([h.coeffs for h in self.hyperplanes])
            if xm.rank(M) != len(self.hyperplanes):
                raise ValueError("hyperplane forms must be linearly independent")

    @property
    def m(self) -> int:
        """Dimension of the section: 6 minus the number of hyperplanes."""
        return 6 - len(self.hyperplanes)

    @classmethod
    def standard(cls, name: str) -> "VarietySpec":
        key = name.lower()
        if key == "g":
            return G
        if key == "y5":
            return Y5
        if key == "y4":
            return Y4
        raise ValueError(f"unknown variety {name!r}; use g, y5, y4 or a custom file")

    @classmethod
    def from_lines(cls, lines: Sequence[str], name: str = "custom") -> "VarietySpec":
        hs = []
        for line in lines:
            line = line.split("#", 1)[0].strip()
            if line:
                hs.append(Hyperplane.parse(line))
        return cls(name, tuple(hs))

    @classmethod
    def from_file(cls, path) -> "VarietySpec":
        return cls.from_lines(Path(path).read_text().splitlines())

    def forms(self, lchart: LambdaChart) -> list[QLinearForm]:
        return [pullback(h, lchart) for h in self.hyperplanes]


G = VarietySpec("G")
Y5 = VarietySpec("Y5", (H1,))
Y4 = VarietySpec("Y4", (H1, H2))


# ---------------------------------------------------------------- ideals

def ideal_SY(lchart, fchart, spec: VarietySpec) -> Ideal:
    """One generator per (hyperplane, F-row): the row substituted into the pulled-back form."""
    lchart, fchart = as_lchart(lchart), as_fchart(fchart)
    F = f_matrix(fchart)
    gens = [form(row) for form in spec.forms(lchart) for row in F]
    return Ideal(gens, CHART_RING)


def _graph_equations(S, fchart: FChart):
    """S = S_P · F on every column, with S_P the pivot columns of S."""
    F = f_matrix(fchart)
    P = fchart.pivot_columns
    SP = [[row[c] for c in P] for row in S]
    eqs = []
    for c in fchart.free_columns:
        for r in range(3):
            rhs = CHART_RING.zero()
            for k in range(3):
                rhs = rhs + SP[r][k] * F[k][c]
            eqs.append(S[r][c] - rhs)
    return eqs, CHART_RING.coerce(poly_det(SP))


def _inverter(D: Polynomial) -> list[Polynomial]:
    if D.is_constant():
        return []
    return [ELIM_RING.var("z") * D.to_ring(ELIM_RING) - 1]


def containment_constraints(span, lchart: LambdaChart, spec: VarietySpec) -> list[Polynomial]:
    """Every span row killed by every pulled-back hyperplane form."""
    return [form(row) for form in spec.forms(lchart) for row in span]


@dataclass
class ShapeResult:
    shape: str
    empty: bool
    ideal: Ideal | None = None
    certificate: ReducednessCertificate | None = None


@dataclass
class LocusResult:
    """T-locus in one chart: its ideal plus the reducedness bookkeeping."""

    ideal: Ideal
    graph_form: bool
    shapes: list = field(default_factory=list)

    @property
    def nonempty_shapes(self) -> list[str]:
        return [s.shape for s in self.shapes if not s.empty]


def _shape_locus(shape: PlaneParam, lchart: LambdaChart | None, fchart: FChart,
                 spec: VarietySpec, certify: bool) -> ShapeResult:
    S = shape.span()
    eqs, D = _graph_equations(S, fchart)
    if D.is_zero():
        return ShapeResult(shape.label, True)
    inv = _inverter(D)
    cons = containment_constraints(S, lchart, spec) if lchart is not None else []
    cons_ideal = None
    if cons:
        cons_ideal = Ideal([c.to_ring(ELIM_RING) for c in cons] + inv, ELIM_RING)
        if is_unit(cons_ideal):
            return ShapeResult(shape.label, True)
    J = Ideal([e.to_ring(ELIM_RING) for e in eqs + cons] + inv, ELIM_RING)
    K = eliminate(J, _DROP)
    if is_unit(K):
        return ShapeResult(shape.label, True)
    ideal = Ideal([g.to_ring(CHART_RING) for g in K.gens], CHART_RING)
    cert = None
    if certify:
        if cons_ideal is None:
            cert = ReducednessCertificate(ok=True, reason="no constraints")
        else:
            sat = eliminate(cons_ideal, ["z"])
            cert = certify_reduced(Ideal([g.to_ring(CHART_RING) for g in sat.gens], CHART_RING))
    return ShapeResult(shape.label, False, ideal, cert)


def _union(results: list[ShapeResult]) -> Ideal:
    ideals = []
    for r in results:
        if not r.empty and not any(r.ideal == seen for seen in ideals):
            ideals.append(r.ideal)
    if not ideals:
        return Ideal([CHART_RING.one()], CHART_RING)
    out = ideals[0]
    for J in ideals[1:]:
        out = intersect(out, J)
    return Ideal(out.groebner().elements, CHART_RING)


@lru_cache(maxsize=None)
def _tg_locus(fkey: str, ptype: PlaneType) -> LocusResult:
    fchart = as_fchart(fkey)
    results = [_shape_locus(s, None, fchart, G, False) for s in plane_shapes(ptype)]
    for r in results:
        if not r.empty:
            r.certificate = ReducednessCertificate(ok=True, reason="no constraints")
    return LocusResult(_union(results), True, results)


def locus_TG(fchart, ptype: PlaneType) -> LocusResult:
    return _tg_locus(as_fchart(fchart).key, PlaneType(ptype))


def ideal_TG(lchart, fchart, ptype: PlaneType) -> Ideal:
    """I_T(G) in the chart; independent of the Λ chart."""
    return locus_TG(fchart, ptype).ideal


@lru_cache(maxsize=None)
def _ty_locus(lcol: int, fkey: str, ptype: PlaneType, spec: VarietySpec) -> LocusResult:
    if not spec.hyperplanes:
        return _tg_locus(fkey, ptype)
    lchart, fchart = LambdaChart(lcol), as_fchart(fkey)
    results = [_shape_locus(s, lchart, fchart, spec, True) for s in plane_shapes(ptype)]
    graph_form = all(r.certificate.ok for r in results if not r.empty)
    return LocusResult(_union(results), graph_form, results)


def locus_TY(lchart, fchart, ptype: PlaneType, spec: VarietySpec) -> LocusResult:
    return _ty_locus(as_lchart(lchart).column, as_fchart(fchart).key, PlaneType(ptype), spec)


def ideal_TY(lchart, fchart, ptype: PlaneType, spec: VarietySpec) -> Ideal:
    return locus_TY(lchart, fchart, ptype, spec).ideal


def clear_caches() -> None:
    _tg_locus.cache_clear()
    _ty_locus.cache_clear()


def constraints_cauchy_binet(R: Sequence[Sequence], lchart, H: Hyperplane) -> list[Polynomial]:
    """σ22 containment constraints recomputed through Cauchy–Binet.

    The plane ∧²(row space of R·Λ) lies in H iff H vanishes on the wedge of
    every pair of rows of R·Λ; the Plücker coordinates of such a pair are
    Σ_S det R[{i,j}, S] · det Λ[S, {k,l}].
    """
    L = lambda_matrix(as_lchart(lchart))
    out = []
    for i, j in ((0, 1), (0, 2), (1, 2)):
        A = [list(R[i]), list(R[j])]
        coords = []
        for k, l in combinations(range(5), 2):
            B = [[row[k], row[l]] for row in L]
            coords.append(cauchy_binet_general(A, B))
        out.append(CHART_RING.coerce(H(ExteriorVector(5, tuple(coords)))))
    return out


# ---------------------------------------------------------------- local freeness

@dataclass(frozen=True)
class Freeness:
    generic_rank: int
    minors_unit: bool


def coefficient_matrix(spec: VarietySpec, lchart) -> list[list[Polynomial]]:
    return [list(f.coeffs) for f in spec.forms(as_lchart(lchart))]


def kernel_freeness(spec: VarietySpec, lchart, seed: int = 0, attempts: int = 5) -> Freeness:
    """Rank of the h×6 coefficient matrix, generically and everywhere on the chart."""
    if not spec.hyperplanes:
        raise ValueError("kernel freeness needs at least one hyperplane")
    M = coefficient_matrix(spec, lchart)
    h = len(M)
    rng = random.Random(seed)
    best = 0
    for _ in range(attempts):
        point = {n: Fraction(rng.randint(-50, 50), rng.randint(1, 9)) for n in BASE_VARS}
        vals = xm.RatMatrix.from_rows([[c.evaluate(point) for c in row] for row in M])
        best = max(best, xm.rank(vals))
        if best == h:
            break
    minors = [poly_det([[row[c] for c in cols] for row in M]) for cols in combinations(range(6), h)]
    return Freeness(best, is_unit(Ideal([CHART_RING.coerce(x) for x in minors], CHART_RING)))


# ---------------------------------------------------------------- fibers

def _as_matrix(V) -> xm.RatMatrix:
    return V if isinstance(V, xm.RatMatrix) else xm.RatMatrix.from_rows(V)


def restricted_form(H: Hyperplane, V4) -> xm.RatMatrix:
    """Gram matrix of Ω = H(· ∧ ·) on the rows of V4."""
    V4 = _as_matrix(V4)
    if V4.shape != (4, 5) or xm.rank(V4) != 4:
        raise ValueError("V4 must be a rank 4 matrix with 4 rows and 5 columns")
    rows = [V4.row(i) for i in range(4)]
    return xm.RatMatrix.from_rows([[H(wedge2(rows[i], rows[j])) for j in range(4)]
                                   for i in range(4)])


def _kernel_in_ambient(H: Hyperplane, V4: xm.RatMatrix) -> list[list[Fraction]]:
    K = xm.kernel(restricted_form(H, V4))
    return xm.row_space([_combine(k, V4) for k in K]) if K else []


def _combine(coeffs, V4: xm.RatMatrix):
    return [sum((c * V4[i, j] for i, c in enumerate(coeffs)), Fraction(0)) for j in range(5)]


@dataclass
class FiberT:
    """Fiber of T(Y) over a 4-space V4, described by linear algebra.

    ``vertices`` spans the space whose lines are the σ31 vertices; every
    σ22-plane in the fiber is ∧²V3 with ``sigma22_core`` ⊆ V3 ⊆ V4.
    """

    empty: bool
    vertices: list = field(default_factory=list)
    sigma22_core: list = field(default_factory=list)
    ranks: tuple = ()


def fiber_T(spec: VarietySpec, V4) -> FiberT:
    V4 = _as_matrix(V4)
    ranks = tuple(xm.rank(restricted_form(h, V4)) for h in spec.hyperplanes)
    if len(spec.hyperplanes) == 1:
        if ranks[0] != 2:
            return FiberT(True, ranks=ranks)
        K = _kernel_in_ambient(spec.hyperplanes[0], V4)
        return FiberT(False, K, K, ranks)
    if len(spec.hyperplanes) == 2:
        needed = [[int(k == n) for k in range(5)] for n in (0, 1, 4)]
        inside = xm.rank(xm.RatMatrix.from_rows(V4.to_rows() + needed)) == 4
        if ranks != (2, 2) or not inside:
            return FiberT(True, ranks=ranks)
        K1 = _kernel_in_ambient(spec.hyperplanes[0], V4)
        K2 = _kernel_in_ambient(spec.hyperplanes[1], V4)
        return FiberT(False, xm.intersect_spaces(K1, K2), xm.row_space(K1 + K2), ranks)
    raise ValueError("fiber_T handles one or two hyperplanes")


def forms_vanish_on(space: Sequence[Sequence], spec: VarietySpec) -> bool:
    """Every hyperplane form vanishes on ∧² of the given subspace of Q⁵."""
    return all(h(wedge2(u, v)) == 0 for h in spec.hyperplanes
               for u, v in combinations(space, 2))


def plane_in_variety(span3: Sequence[ExteriorVector], spec: VarietySpec) -> bool:
    """True iff every form vanishes identically on the span of three independent vectors."""
    if len(span3) != 3:
        raise ValueError("a plane is spanned by 3 exterior vectors")
    rows = [list(v.coeffs) for v in span3]
    minors = [poly_det([[r[c] for c in cols] for r in rows]) for cols in combinations(range(10), 3)]
    if all((m.is_zero() if isinstance(m, Polynomial) else m == 0) for m in minors):
        raise ValueError("exterior vectors are linearly dependent")
    for h in spec.hyperplanes:
        for v in span3:
            val = h(v)
            if isinstance(val, Polynomial) and not val.is_zero():
                return False
            if not isinstance(val, Polynomial) and val != 0:
                return False
    return True
