import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from conicloci import exactmath as xm
from conicloci.charts import (ALL_F, ALL_LAMBDA, ChartError, FChart, H1, H2, Hyperplane, LambdaChart,
                              basis_wedges, f_matrix, lambda_matrix, pullback)
from conicloci.pluecker import FIBER, ExteriorVector, plucker_of_rowspace, wedge2
from conicloci.poly import ParseError, parse


def texts(rows):
    return [[str(x) for x in r] for r in rows]


def test_lambda_matrices():
    assert texts(lambda_matrix(4)) == [["1", "0", "0", "0", "a"], ["0", "1", "0", "0", "b"],
                                       ["0", "0", "1", "0", "c"], ["0", "0", "0", "1", "d"]]
    assert texts(lambda_matrix(2)) == [["1", "0", "a", "0", "0"], ["0", "1", "b", "0", "0"],
                                       ["0", "0", "c", "1", "0"], ["0", "0", "d", "0", "1"]]
    for L in ALL_LAMBDA:
        zeroed = [[x.substitute({"a": 0, "b": 0, "c": 0, "d": 0}) for x in r] for r in lambda_matrix(L)]
        assert all(str(x) in ("0", "1") for r in zeroed for x in r)
    with pytest.raises(ChartError):
        LambdaChart(5)


def test_basis_wedges():
    W = basis_wedges(lambda_matrix(2))
    assert {k: str(v) for k, v in W[0].as_dict().items() if not v.is_zero()} == {"01": "1", "02": "b", "12": "-a"}
    assert {k: str(v) for k, v in W[5].as_dict().items() if not v.is_zero()} == {"23": "-d", "24": "c", "34": "1"}
    top = [[int(i == j) for j in range(5)] for i in range(4)]
    assert basis_wedges(top) == [ExteriorVector.basis(5, i, j) for i, j in FIBER]


def test_pullbacks():
    assert pullback(H1, 2).texts() == ["-a", "-1", "0", "c", "d", "0"]
    assert pullback(H2, 2).texts() == ["0", "0", "-a", "1", "-b", "-c"]
    assert pullback(H1, 3).texts() == ["-b", "-c", "-d", "1", "0", "0"]
    assert pullback(H2, 3).texts() == ["-a", "0", "0", "c", "d", "-1"]


def test_f_matrices():
    assert texts(f_matrix("01,03,13")) == [["1", "e", "0", "f", "0", "g"], ["0", "h", "1", "i", "0", "j"],
                                           ["0", "k", "0", "l", "1", "m"]]
    assert texts(f_matrix("01,12,13")) == [["1", "e", "f", "0", "0", "g"], ["0", "h", "i", "1", "0", "j"],
                                           ["0", "k", "l", "0", "1", "m"]]
    zero = {n: 0 for n in "efghijklm"}
    M = [[x.substitute(zero) for x in r] for r in f_matrix("01,02,03")]
    assert texts(M) == [["1", "0", "0", "0", "0", "0"], ["0", "1", "0", "0", "0", "0"], ["0", "0", "1", "0", "0", "0"]]
    assert len(ALL_F) == 20 and len(set(ALL_F)) == 20
    for bad in ("01,01,02", "01,02", "01,02,04", "10,02,03"):
        with pytest.raises(ChartError):
            FChart.parse(bad)


def test_hyperplane_parsing():
    assert str(Hyperplane.parse("p12 - p03")) == "-p03 + p12"
    with pytest.raises(ParseError):
        Hyperplane.parse("p12*p03")
    with pytest.raises(ParseError):
        Hyperplane.parse("p15")
    with pytest.raises(ValueError):
        Hyperplane.parse("p12 - p12")


rat = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 4), rat, rat)
def test_pullback_is_linear(col, x, y):
    combo = Hyperplane(tuple(x * a + y * b for a, b in zip(H1.coeffs, H2.coeffs))) if (x or y) else None
    if combo is None:
        return
    lhs = pullback(combo, col).coeffs
    rhs = [x * p + y * q for p, q in zip(pullback(H1, col).coeffs, pullback(H2, col).coeffs)]
    assert list(lhs) == rhs


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 4), st.lists(rat, min_size=4, max_size=4),
       st.lists(rat, min_size=4, max_size=4), st.lists(rat, min_size=4, max_size=4))
def test_pullback_matches_plucker(col, point, r0, r1):
    values = dict(zip("abcd", point))
    L = [[x.evaluate(values) for x in row] for row in lambda_matrix(col)]
    ambient_rows = [[sum(c * L[i][j] for i, c in enumerate(r)) for j in range(5)] for r in (r0, r1)]
    p = ExteriorVector(5, tuple(plucker_of_rowspace(ambient_rows)))
    q = wedge2(r0, r1).coeffs
    for H in (H1, H2):
        form = pullback(H, col)
        assert H(p) == form(q).evaluate(values)


def _normalize(M, pivots):
    sub = M.submatrix(range(M.rows), pivots)
    if xm.det(sub) == 0:
        return None
    inv_rows = xm.rref(xm.RatMatrix.from_rows([list(sub.row(i)) + [int(i == j) for j in range(M.rows)]
                                               for i in range(M.rows)]))
    inv = inv_rows.submatrix(range(M.rows), range(M.rows, 2 * M.rows))
    return inv @ M


def test_charts_cover_random_points():
    rng = random.Random(0)
    for _ in range(30):
        V = xm.RatMatrix.from_rows([[rng.randint(-3, 3) for _ in range(5)] for _ in range(4)])
        if xm.rank(V) < 4:
            continue
        assert any(_normalize(V, L.pivots) is not None for L in ALL_LAMBDA)
        F = xm.RatMatrix.from_rows([[rng.randint(-3, 3) for _ in range(6)] for _ in range(3)])
        if xm.rank(F) < 3:
            continue
        hits = [C for C in ALL_F if _normalize(F, C.pivot_columns) is not None]
        assert hits
        N = _normalize(F, hits[0].pivot_columns)
        assert [N[i, c] for i in range(3) for c in hits[0].pivot_columns] == [1, 0, 0, 0, 1, 0, 0, 0, 1]
