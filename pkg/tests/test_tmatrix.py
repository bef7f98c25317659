import pytest

from superyangian.core import AlgebraParams
from superyangian.normal_form import yangian
from superyangian.series import USeries, series_invert
from superyangian.tmatrix import (
    QuasideterminantError,
    RecompositionError,
    SeriesMatrix,
    TMatrix,
    build_T,
    eq5_check,
    gauss_decompose,
    matrix_invert,
    primed_series,
    quasideterminant,
    recomposition_mismatches,
    rtt_residual,
)


def test_build_T_entries_and_signs():
    T = build_T(AlgebraParams(1, 1, 3))
    Y = T.ring
    assert T.entry(1, 2).coeffs == [Y.zero, Y.t(1, 2, 1), Y.t(1, 2, 2), Y.t(1, 2, 3)]
    assert T.sign(1, 2) == -1
    assert T.twisted(1, 2).coeffs[1] == -Y.t(1, 2, 1)
    assert build_T(AlgebraParams(2, 1, 2)).sign(1, 1) == 1
    assert T.constant_is_identity()


def test_matrix_invert_first_order():
    T = build_T(AlgebraParams(1, 1, 3))
    Y = T.ring
    Tp = matrix_invert(T)
    assert Tp.entry(2, 2).coeffs[0] == Y.one
    assert Tp.entry(2, 2).coeffs[1] == -Y.t(2, 2, 1)
    I = SeriesMatrix.identity(2, Y, 3)
    assert T * Tp == I
    assert Tp * T == I
    assert matrix_invert(Tp) == T


def test_tprime_22_is_inverse_of_d2():
    T = build_T(AlgebraParams(1, 1, 3))
    g = gauss_decompose(T)
    assert matrix_invert(T).entry(2, 2) == g.dinv_series(2)


def test_quasideterminant_examples():
    T = build_T(AlgebraParams(1, 1, 3))
    one = T.submatrix([1], [1])
    assert quasideterminant(one, 1, 1) == T.entry(1, 1)
    t11inv = series_invert(T.entry(1, 1))
    by_hand = T.entry(2, 2) - T.entry(2, 1) * t11inv * T.entry(1, 2)
    for method in ("inverse", "schur"):
        assert quasideterminant(T, 2, 2, method) == by_hand
    assert gauss_decompose(T).d_series(2) == by_hand


def test_quasideterminant_rejects_singular():
    Y = yangian(1, 1)
    Z = USeries.zero(2, Y)
    X = SeriesMatrix([[Z, Z], [Z, Z]], Y, 2)
    with pytest.raises(QuasideterminantError) as err:
        quasideterminant(X, 1, 1, "inverse")
    assert err.value.stage


def test_gauss_gl11_frozen():
    g = gauss_decompose(build_T(AlgebraParams(1, 1, 2)))
    assert g.to_json() == {
        "d": {"1": ["1", "t[1,1,1]", "t[1,1,2]"],
              "2": ["1", "t[2,2,1]", "t[2,2,2] - t[2,1,1]*t[1,2,1]"]},
        "e": {"1,2": ["0", "t[1,2,1]", "t[1,2,2] - t[1,1,1]*t[1,2,1]"]},
        "f": {"2,1": ["0", "t[2,1,1]", "t[2,1,2] - t[2,1,1]*t[1,1,1]"]},
    }


def test_gauss_gl11_formulas():
    T = build_T(AlgebraParams(1, 1, 3))
    g = gauss_decompose(T)
    inv = series_invert(T.entry(1, 1))
    assert g.d_series(1) == T.entry(1, 1)
    assert g.e_series(1, 2) == inv * T.entry(1, 2)
    assert g.f_series(2, 1) == T.entry(2, 1) * inv
    assert T.entry(2, 2) == g.f_series(2, 1) * g.d_series(1) * g.e_series(1, 2) + g.d_series(2)


@pytest.mark.parametrize("mn", [(1, 1), (2, 1), (1, 2), (2, 2)])
def test_recomposition_and_mutation(mn):
    T = build_T(AlgebraParams(*mn, 3))
    g = gauss_decompose(T)
    assert recomposition_mismatches(g, T) == []
    Y = T.ring
    s = g.e[(1, 2)]
    cs = list(s.coeffs)
    cs[2] = cs[2] + Y.t(1, 1, 1)
    g.e[(1, 2)] = USeries(cs, s.N, Y)
    assert recomposition_mismatches(g, T) != []


def test_gauss_raises_on_inconsistent_input(monkeypatch):
    import superyangian.tmatrix as tm

    T = build_T(AlgebraParams(1, 1, 2))
    monkeypatch.setattr(tm, "recomposition_mismatches", lambda g, T: [(1, 1)])
    with pytest.raises(RecompositionError):
        tm.gauss_decompose(T)


def test_d_series_commute():
    g = gauss_decompose(build_T(AlgebraParams(2, 1, 4)))
    Y = g.ring
    for i in range(1, 4):
        for j in range(1, 4):
            for r in range(1, 4):
                for s in range(1, 5 - r):
                    assert Y.supercommutator(g.dc(i, r), g.dc(j, s)).is_zero()


def test_primed_series():
    g = gauss_decompose(build_T(AlgebraParams(2, 1, 3)))
    ep, fp = primed_series(g)
    assert ep[(1, 2)] == g.e_series(1, 2) * -1
    assert ep[(1, 3)] == g.e_series(1, 2) * g.e_series(2, 3) - g.e_series(1, 3)
    E, F = g.E_matrix(), g.F_matrix()
    rows = [[USeries.one(3, g.ring) if i == j else ep.get((i, j), USeries.zero(3, g.ring))
             for j in range(1, 4)] for i in range(1, 4)]
    Ep = TMatrix(rows, g.params, g.ring)
    assert E * Ep == SeriesMatrix.identity(3, g.ring, 3)
    rows = [[USeries.one(3, g.ring) if i == j else fp.get((i, j), USeries.zero(3, g.ring))
             for j in range(1, 4)] for i in range(1, 4)]
    assert F * TMatrix(rows, g.params, g.ring) == SeriesMatrix.identity(3, g.ring, 3)


@pytest.mark.parametrize("mn", [(1, 1), (2, 1)])
def test_rtt_zero(mn):
    rep = rtt_residual(AlgebraParams(*mn, 3))
    assert rep.instances > 0
    assert rep.passed, rep.failures[:3]


def test_eq5():
    assert eq5_check(AlgebraParams(1, 1, 3)).passed
    assert eq5_check(AlgebraParams(2, 1, 2)).passed
