"""One test per acceptance criterion; the terminal summary prints a line for each."""

import random
import time
from fractions import Fraction

import conftest
from conftest import ACCEPTANCE

from conicloci import exactmath as xm
from conicloci.charts import ALL_LAMBDA
from conicloci.groebner import Ideal, buchberger, eliminate, ideal_member
from conicloci.loci import Y4, Y5, PlaneType, clear_caches, kernel_freeness
from conicloci.pluecker import cauchy_binet_det, is_decomposable, wedge2
from conicloci.poly import CHART_RING, Ring, parse
from conicloci.verify import (TRANSCRIPT, CLEAN, EMPTY_CLEAN, MISMATCH, ChartTask, cross_check, props,
                              read_published, summarize, verify_chart)

S22, S31 = PlaneType.SIGMA22, PlaneType.SIGMA31


def record(n, checks, note=""):
    """Store the outcome before asserting so the summary line reflects every sub-check."""
    failed = [name for name, ok in checks if not ok]
    ACCEPTANCE[n] = (not failed, note + (f"; failed: {', '.join(failed)}" if failed else ""))
    assert not failed, failed


def published(*texts):
    return Ideal([read_published(t) for t in texts], CHART_RING)


def gb_equal(report, name, *texts):
    return report.reduced_gbs[name] == published(*texts).groebner().texts()


def test_criterion_1_y5_charts():
    clear_caches()
    t0 = time.perf_counter()
    expected = [("01,02,12", S22, EMPTY_CLEAN), ("01,03,13", S22, CLEAN),
                ("02,03,23", S22, CLEAN), ("12,13,23", S22, CLEAN),
                ("01,12,13", S31, CLEAN), ("03,13,23", S31, CLEAN)]
    reports = {(k, t): verify_chart(ChartTask(Y5, 2, k, t)) for k, t, _ in expected}
    elapsed = time.perf_counter() - t0
    checks = [(f"{t} F{{{k}}} is {v}", reports[k, t].verdict == v) for k, t, v in expected]
    r22, r31 = reports["01,03,13", S22], reports["01,12,13", S31]
    checks += [
        ("T22(G)", gb_equal(r22, "tg", "g", "i", "k", "f+j", "e-m", "h-l")),
        ("S(Y)", gb_equal(r22, "sy", "-a-e+cf", "-h+ci", "-k+cl+d")),
        ("T22(Y)", gb_equal(r22, "ty", "g", "i", "k", "f+j", "e-m", "h", "l", "d", "-fc+e+a")),
        ("T31(Y)", gb_equal(r31, "ty", "f+j", "e-m", "e+a", "h-l", "c-h", "g", "i", "k", "d")),
        ("paper_match", r22.paper_match["status"] == "match" == r31.paper_match["status"]),
        ("runtime < 5 s", elapsed < 5),
    ]
    record(1, checks, f"{elapsed:.2f} s")


def test_criterion_2_y4_charts():
    clear_caches()
    t0 = time.perf_counter()
    s31 = {2: (verify_chart(ChartTask(Y4, 2, "03,13,23", S31)),
               ("a", "b", "d", "g", "i", "k", "f", "j", "e+m", "h-l", "h-c^2", "e+c")),
           3: (verify_chart(ChartTask(Y4, 3, "01,02,03", S31)),
               ("a", "b", "d", "g", "i", "k", "e", "m", "h-l", "f-j", "h-c", "f-c^2"))}
    s22 = {(col, key): verify_chart(ChartTask(Y4, col, key, S22))
           for col in (2, 3) for key in ("01,02,12", "01,03,13", "12,13,23")}
    elapsed = time.perf_counter() - t0
    checks = []
    for col, (r, gens) in s31.items():
        checks.append((f"Λ{col} sigma31 clean", r.verdict == CLEAN))
        checks.append((f"Λ{col} sigma31 T(Y) match", gb_equal(r, "ty", *gens)
                       and r.paper_match["status"] == "match"))
    for (col, key), r in s22.items():
        checks.append((f"Λ{col} sigma22 F{{{key}}} empty-clean",
                       r.verdict == EMPTY_CLEAN and r.reduced_gbs["sum"] == ["1"]))
    checks.append(("runtime < 5 s", elapsed < 5))
    record(2, checks, f"{elapsed:.2f} s")


def test_criterion_3_sweeps(sweeps):
    checks, notes = [], []
    for name, (reports, secs) in sweeps.items():
        s = summarize(reports)
        checks.append((f"{name} 200 reports", s["total"] == 200))
        checks.append((f"{name} no mismatch", s["counts"][MISMATCH] == 0))
        checks.append((f"{name} < 120 s", secs < 120))
        notes.append(f"{name} {secs:.1f} s")
    record(3, checks, ", ".join(notes))


def test_criterion_4_nonempty_loci(sweeps):
    y4, _ = sweeps["Y4"]
    y5, _ = sweeps["Y5"]
    nonempty4 = {t for t in PlaneType if any(r.ty_proper and r.task.ptype == t for r in y4)}
    proper5 = [r for r in y5 if r.ty_proper]
    d = parse("d", CHART_RING)
    # chart k != 4 contains e4 exactly when the row with pivot 4, e4 + d e_k, has d = 0;
    # chart 4 never contains e4
    base_condition = all(r.task.lchart != 4 and ideal_member(
        d, Ideal([parse(g, CHART_RING) for g in r.reduced_gbs["ty"]], CHART_RING)) for r in proper5)
    record(4, [("Y4 sigma31 nonempty", S31 in nonempty4),
               ("Y4 sigma22 nonempty", S22 in nonempty4),
               ("Y5 has nonempty charts", bool(proper5)),
               ("Y5 loci lie over e4 in Λ", base_condition)])


def test_criterion_5_kernel_freeness():
    t0 = time.perf_counter()
    checks = []
    for spec in (Y5, Y4):
        for L in ALL_LAMBDA:
            fr = kernel_freeness(spec, L)
            checks.append((f"{spec.name} Λ{L.column}",
                           fr.minors_unit and fr.generic_rank == 6 - spec.m))
    elapsed = time.perf_counter() - t0
    checks.append(("runtime < 1 s", elapsed < 1))
    record(5, checks, f"{elapsed:.2f} s")


def test_criterion_6_cauchy_binet():
    rng = random.Random(0)
    failures = 0
    for _ in range(200):
        A = xm.RatMatrix.from_rows([[rng.randint(-20, 20) for _ in range(3)] for _ in range(2)])
        B = xm.RatMatrix.from_rows([[rng.randint(-20, 20) for _ in range(2)] for _ in range(3)])
        failures += cauchy_binet_det(A, B) != xm.det(A @ B)
    record(6, [("200 trials", failures == 0)], f"{failures} failures")


def test_criterion_7_set_theoretic():
    suites = {s.name: s for s in props(seed=0, trials=100)}
    wanted = {"Y5 restricted-form dichotomy": 100, "Y4 fiber structure": 100}
    checks = [(n, suites[n].ok and suites[n].total >= k) for n, k in wanted.items()]
    checks.append(("plane witnesses", suites["plane witnesses"].ok))
    record(7, checks, ", ".join(f"{s.name} {s.passed}/{s.total}" for s in suites.values()
                                if s.name in wanted or s.name == "plane witnesses"))


def test_criterion_8_discrepancy_audit(sweeps):
    reports = sweeps["Y5"][0] + sweeps["Y4"][0]
    found = cross_check(reports)
    third = [d for d in found if d.task == "Y5 Λ2 F{02,03,23} sigma22" and d.ideal == "sy"]
    listed = {str(r.task) for r in reports if r.paper_match["status"] != "not-listed"}
    diverging = {str(r.task) for r in reports if r.paper_match["status"] in ("typo-suspect", "divergent")}
    record(8, [("all typo-suspect", all(d.classification == "typo-suspect" for d in found)),
               ("third-chart S(Y) listed", bool(third) and third[0].published_only == ["-ak+dl+dm"]),
               ("every divergence reported", diverging == {d.task for d in found}),
               ("transcript fully checked", len(listed) == len(TRANSCRIPT))],
           f"{len(found)} divergences")


def _random_poly(rng, ring, terms=3):
    p = ring.zero()
    for _ in range(terms):
        m = ring.one()
        for v in ring.names:
            m = m * ring.var(v) ** rng.randint(0, 2)
        p = p + Fraction(rng.randint(-5, 5), rng.randint(1, 3)) * m
    return p


def test_criterion_9_property_suites():
    rng = random.Random(0)
    R = Ring(["x", "y", "z"])
    checks = []
    axioms = gb_ok = elim_ok = True
    for _ in range(30):
        p, q, r = (_random_poly(rng, R) for _ in range(3))
        axioms &= (p * (q + r) == p * q + p * r and (p * q) * r == p * (q * r)
                   and p + q == q + p and (p - p).is_zero())
        gens = [_random_poly(rng, R, 2) for _ in range(3)]
        shuffled = gens[::-1] + [gens[0] + gens[1]]
        gb_ok &= buchberger(Ideal(gens, R)).texts() == buchberger(Ideal(shuffled, R)).texts()
        J = Ideal(gens, R)
        E = eliminate(J, ["x"])
        elim_ok &= all(g.degree_in("x") == 0 and ideal_member(g, J) for g in E.gens)
    plucker = all(is_decomposable(wedge2([rng.randint(-9, 9) for _ in range(5)],
                                         [rng.randint(-9, 9) for _ in range(5)])) for _ in range(100))
    suites = props(seed=0, trials=100)
    checks = [("ring axioms", axioms), ("GB canonicity", gb_ok),
              ("elimination soundness", elim_ok), ("Plucker relations", plucker)]
    checks += [(s.name, s.ok) for s in suites]
    elapsed = time.perf_counter() - conftest.SESSION_START
    checks.append(("wall time so far < 5 min", elapsed < conftest.WALL_BUDGET))
    record(9, checks, f"{len(suites)} props suites")
