from fractions import Fraction

import pytest

from superyangian.berezinian import (
    berezinian_product_form,
    berezinian_root,
    berezinian_sum_form,
    centrality_check,
    leading_term_check,
    sl_generators_fixed,
)
from superyangian.core import AlgebraParams
from superyangian.morphisms import mu
from superyangian.normal_form import yangian
from superyangian.series import USeries, series_shift
from superyangian.tmatrix import build_T, gauss_decompose, matrix_invert


def product(p):
    return berezinian_product_form(gauss_decompose(build_T(p)), p)


def test_gl11_small_cases():
    p = AlgebraParams(1, 1, 3)
    Y = yangian(1, 1)
    T = build_T(p)
    b = berezinian_sum_form(p)
    assert b.series == T.entry(1, 1) * matrix_invert(T).entry(2, 2)
    assert b.coeff(1) == Y.t(1, 1, 1) - Y.t(2, 2, 1)
    g = gauss_decompose(T)
    assert product(p).series == g.d_series(1) * g.dinv_series(2)


def test_gl11_b2_frozen():
    b = product(AlgebraParams(1, 1, 2))
    assert b.coeff(2).render() == ("t[1,1,2] - t[2,2,2] + t[2,1,1]*t[1,2,1] "
                                   "- t[1,1,1]*t[2,2,1] + t[2,2,1]*t[2,2,1]")


def test_degenerate_even_case():
    p = AlgebraParams(1, 0, 3)
    assert berezinian_sum_form(p).series == build_T(p).entry(1, 1)


def test_gl21_first_coefficient():
    Y = yangian(2, 1)
    b = product(AlgebraParams(2, 1, 2))
    assert b.coeff(1) == Y.t(1, 1, 1) + Y.t(2, 2, 1) - Y.t(3, 3, 1)


@pytest.mark.parametrize("mn,N", [((1, 1), 4), ((2, 1), 4), ((1, 2), 3), ((2, 0), 3)])
def test_sum_equals_product(mn, N):
    p = AlgebraParams(*mn, N)
    assert berezinian_sum_form(p) == product(p)


@pytest.mark.parametrize("mn,N", [((1, 1), 4), ((2, 1), 3), ((1, 2), 3)])
def test_centrality(mn, N):
    rep = centrality_check(AlgebraParams(*mn, N))
    assert rep.instances > 0 and rep.passed


def test_leading_term():
    for mn in [(1, 1), (2, 1)]:
        for r in (1, 2, 3):
            assert leading_term_check(AlgebraParams(*mn, 3), r).passed
    with pytest.raises(ValueError):
        leading_term_check(AlgebraParams(1, 1, 2), 3)


def test_leading_term_gl11_r2():
    Y = yangian(1, 1)
    b2 = product(AlgebraParams(1, 1, 2)).coeff(2)
    top = b2.part(lambda w: Y.deg2(w) == 1)
    assert top == Y.t(1, 1, 2) - Y.t(2, 2, 2)


def test_mu_scales_berezinian():
    # mu_f(b(u)) = f(u) f(u-1) ... f(u-m+n+1) b(u)
    p = AlgebraParams(2, 1, 3)
    Y = yangian(2, 1)
    f = USeries([Fraction(1), Fraction(2), Fraction(-1, 3), Fraction(1)], 3)
    b = product(p)
    h = mu(Y, f)
    lifted = USeries([Y.scalar(c) for c in f.coeffs], 3, Y)
    expect = lifted * b.series
    for r in range(1, 4):
        assert h(b.coeff(r)) == expect.coeffs[r]


def test_sl_generators_fixed():
    for mn in [(1, 1), (2, 1)]:
        assert sl_generators_fixed(AlgebraParams(*mn, 3), [1, Fraction(3, 2)]).passed
    assert sl_generators_fixed(AlgebraParams(1, 1, 2), [1]).passed


@pytest.mark.parametrize("mn", [(1, 0), (2, 0), (2, 1)])
def test_root_round_trip(mn):
    p = AlgebraParams(*mn, 3)
    root, rep = berezinian_root(p, f=[1, 2, Fraction(1, 2)])
    assert rep.passed
    if mn[0] - mn[1] == 1:
        assert root == product(p).series


def test_root_k2_first_coefficient():
    p = AlgebraParams(2, 0, 3)
    root, _ = berezinian_root(p)
    assert root.coeffs[1] == product(p).coeff(1).scale(Fraction(1, 2))


def test_root_needs_m_greater_than_n():
    with pytest.raises(ValueError):
        berezinian_root(AlgebraParams(1, 1, 2))
