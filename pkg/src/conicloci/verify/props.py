"""Sampling suites for the set-theoretic statements, with a fixed seed."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .. import exactmath as xm
from ..charts import ALL_LAMBDA, Hyperplane, pullback
from ..loci import (Y4, Y5, VarietySpec, fiber_T, forms_vanish_on, kernel_freeness,
                    plane_in_variety, restricted_form, sigma31_span)
from ..pluecker import (ExteriorVector, cauchy_binet_det, cauchy_binet_general,
                        is_decomposable, plucker_of_rowspace, plucker_relation_ok, wedge2)
from ..poly import CHART_RING


@dataclass
class Suite:
    name: str
    passed: int = 0
    total: int = 0
    failures: list = field(default_factory=list)

    def record(self, ok: bool, note: str = "") -> None:
        self.total += 1
        if ok:
            self.passed += 1
        elif len(self.failures) < 5:
            self.failures.append(note)

    @property
    def ok(self) -> bool:
        return self.total > 0 and self.passed == self.total

    def as_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "total": self.total,
                "failures": self.failures}


def _vec(rng: random.Random, n: int, lo: int = -9, hi: int = 9) -> list[Fraction]:
    return [Fraction(rng.randint(lo, hi)) for _ in range(n)]


def _unit(k: int) -> list[Fraction]:
    return [Fraction(int(i == k)) for i in range(5)]


def _contains(V: xm.RatMatrix, vectors) -> bool:
    return xm.rank(xm.RatMatrix.from_rows(V.to_rows() + [list(v) for v in vectors])) == xm.rank(V)


def sample_v4(rng: random.Random, through=(), avoid=None) -> xm.RatMatrix:
    """A random rank 4 subspace of Q⁵ containing ``through``; redraws
    degenerate samples and those containing ``avoid``."""
    while True:
        rows = [list(v) for v in through] + [_vec(rng, 5) for _ in range(4 - len(through))]
        V = xm.RatMatrix.from_rows(rows)
        if xm.rank(V) != 4:
            continue
        if avoid is not None and _contains(V, [avoid]):
            continue
        return V


def suite_y5_dichotomy(rng: random.Random, trials: int) -> Suite:
    s = Suite("Y5 restricted-form dichotomy")
    e4 = _unit(4)
    H = Y5.hyperplanes[0]
    for _ in range(trials):
        V = sample_v4(rng, through=[e4])
        fib = fiber_T(Y5, V)
        ok = (xm.rank(restricted_form(H, V)) == 2 and not fib.empty
              and len(fib.vertices) == 2 and _contains(xm.RatMatrix.from_rows(fib.vertices), [e4])
              and forms_vanish_on(fib.vertices, Y5))
        if ok:
            # every 3-space between the kernel and V4 is isotropic
            extra = (xm.RatMatrix.from_rows([_vec(rng, 4)]) @ V).row(0)
            ok = forms_vanish_on(fib.sigma22_core + [extra], Y5)
            # and the vertex of any kernel line kills all of V4
            x = fib.vertices[0]
            ok = ok and all(H(wedge2(x, V.row(i))) == 0 for i in range(4))
        s.record(ok, f"with e4: {V}")
        V = sample_v4(rng, avoid=e4)
        fib = fiber_T(Y5, V)
        s.record(xm.rank(restricted_form(H, V)) == 4 and fib.empty, f"without e4: {V}")
    return s


def suite_y4_fibers(rng: random.Random, trials: int) -> Suite:
    s = Suite("Y4 fiber structure")
    base = [_unit(0), _unit(1), _unit(4)]
    for _ in range(trials):
        V = sample_v4(rng, through=base)
        fib = fiber_T(Y4, V)
        ok = (not fib.empty and fib.ranks == (2, 2) and len(fib.vertices) == 1
              and len(fib.sigma22_core) == 3 and forms_vanish_on(fib.sigma22_core, Y4))
        if ok:
            x = fib.vertices[0]
            ok = all(h(wedge2(x, V.row(i))) == 0 for h in Y4.hyperplanes for i in range(4))
        s.record(ok, f"through e0,e1,e4: {V}")
        W = sample_v4(rng)
        if not _contains(W, base):
            s.record(fiber_T(Y4, W).empty, f"general: {W}")
    return s


def suite_cauchy_binet(rng: random.Random, trials: int) -> Suite:
    s = Suite("Cauchy-Binet")
    for _ in range(trials):
        A = xm.RatMatrix.from_rows([_vec(rng, 3) for _ in range(2)])
        B = xm.RatMatrix.from_rows([_vec(rng, 2) for _ in range(3)])
        s.record(cauchy_binet_det(A, B) == xm.det(A @ B), f"{A} {B}")
        A4 = xm.RatMatrix.from_rows([_vec(rng, 4) for _ in range(2)])
        B4 = xm.RatMatrix.from_rows([_vec(rng, 2) for _ in range(4)])
        s.record(cauchy_binet_general(A4, B4) == xm.det(A4 @ B4), f"{A4} {B4}")
    return s


def suite_plucker(rng: random.Random, trials: int) -> Suite:
    s = Suite("Plucker relations")
    for _ in range(trials):
        M = [_vec(rng, 5) for _ in range(2)]
        s.record(is_decomposable(ExteriorVector(5, tuple(plucker_of_rowspace(M)))), f"{M}")
        u, v = _vec(rng, 4), _vec(rng, 4)
        s.record(plucker_relation_ok(wedge2(u, v)), f"{u} {v}")
        u, v = _vec(rng, 3), _vec(rng, 3)
        m01, m02, m12 = plucker_of_rowspace([u, v])
        s.record(xm.cross3(u, v) == [m12, -m02, m01], f"{u} {v}")
    return s


def witness_planes() -> Suite:
    """The explicit planes and the conic of the worked exceptional examples."""
    s = Suite("plane witnesses")
    R = CHART_RING
    t = R.var("t")
    one, zero = R.one(), R.zero()
    e = [[one if k == n else zero for k in range(5)] for n in range(5)]
    v = [one, t, zero, zero, -t ** 2]
    w = [zero, zero, one, t, zero]
    P_t = [wedge2(v, e[1]), wedge2(v, w), wedge2(v, e[4])]
    s.record(plane_in_variety(P_t, Y4), "P_t")
    S = [wedge2(e[0], e[1]), wedge2(e[0], e[4]), wedge2(e[1], e[4])]
    s.record(plane_in_variety(S, Y4), "S")
    a = v
    s.record((a[0] * a[4] + a[1] ** 2).is_zero() and a[2].is_zero() and a[3].is_zero(), "conic")
    # vertex in the Λ chart with a..d in column 2, on the locus a = b = d = 0
    c = R.var("c")
    x = [-c ** 2, -c, zero, one]
    rows = sigma31_span(x)
    restrict = {"a": 0, "b": 0, "d": 0}
    ok = True
    for h in Y4.hyperplanes:
        form = pullback(h, 2)
        ok = ok and all(form(r).substitute(restrict).is_zero() for r in rows)
    s.record(ok, "vertex [-c^2:-c:0:1]")
    x3 = [one, c, zero, -c ** 2]
    ok = True
    for h in Y4.hyperplanes:
        form = pullback(h, 3)
        ok = ok and all(form(r).substitute(restrict).is_zero() for r in sigma31_span(x3))
    s.record(ok, "vertex [1:c:0:-c^2]")
    return s


def suite_freeness() -> Suite:
    s = Suite("kernel local freeness m=4,5")
    for spec in (Y5, Y4):
        for L in ALL_LAMBDA:
            fr = kernel_freeness(spec, L)
            s.record(fr.minors_unit and fr.generic_rank == 6 - spec.m, f"{spec.name} Λ{L.column}")
    return s


def suite_small_m(rng: random.Random) -> Suite:
    """Generic sections of dimension 1 and 2: the coefficient matrix has rank
    6-m, leaving a kernel of rank m < 3, so S(Y_m) has no points."""
    s = Suite("generic rank for m=1,2")
    for m in (1, 2):
        while True:
            hs = tuple(Hyperplane(tuple(Fraction(rng.randint(-9, 9)) for _ in range(10)))
                       for _ in range(6 - m))
            try:
                spec = VarietySpec(f"Y{m}", hs)
                break
            except ValueError:
                continue
        for L in ALL_LAMBDA:
            fr = kernel_freeness(spec, L, seed=rng.randrange(1 << 30))
            s.record(fr.generic_rank == 6 - m and 6 - fr.generic_rank < 3, f"m={m} Λ{L.column}")
    return s


def props(seed: int = 0, trials: int = 100) -> list[Suite]:
    if trials < 1:
        raise ValueError("trials must be at least 1")
    rng = random.Random(seed)
    return [suite_y5_dichotomy(rng, trials), suite_y4_fibers(rng, trials),
            suite_cauchy_binet(rng, trials), suite_plucker(rng, trials),
            witness_planes(), suite_freeness(), suite_small_m(rng)]
