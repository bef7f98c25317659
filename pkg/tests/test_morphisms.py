from fractions import Fraction

import pytest

from superyangian import morphisms as M
from superyangian.core import AlgebraParams, ParamsMismatch
from superyangian.normal_form import yangian
from superyangian.series import USeries
from superyangian.tensor import gl_superalgebra, tensor, tensor_power
from superyangian.tmatrix import build_T, matrix_invert

from conftest import random_element

SMALL = [(1, 1), (2, 1)]


def test_coproduct_level_one(gl21):
    Y = gl21
    P = tensor_power(Y, 2)
    for i in range(1, 4):
        for j in range(1, 4):
            t = Y.t(i, j, 1)
            assert M.coproduct(t) == P.embed(t, 1) + P.embed(t, 2)
    assert M.coproduct(Y.one) == P.one


def test_coproduct_level_two(gl11):
    Y = gl11
    got = M.coproduct(Y.t(1, 2, 2))
    expect = (tensor(Y.t(1, 2, 2), Y.one) + tensor(Y.one, Y.t(1, 2, 2))
              + tensor(Y.t(1, 1, 1), Y.t(1, 2, 1)) + tensor(Y.t(1, 2, 1), Y.t(2, 2, 1)))
    assert got == expect


def test_koszul_sign_in_tensor_product(gl11):
    Y = gl11
    P = tensor_power(Y, 2)
    a, b = Y.t(1, 2, 1), Y.t(2, 1, 1)
    # (1 (x) a)(b (x) 1) = (-1)^{|a||b|} b (x) a
    assert P.mul(P.embed(a, 2), P.embed(b, 1)) == -tensor(b, a)


def test_counit_and_antipode(gl11):
    Y = gl11
    assert M.counit(Y.t(1, 1, 3)) == 0
    assert M.counit(Y.one) == 1
    assert M.antipode_element(Y.t(1, 2, 1)) == -Y.t(1, 2, 1)
    assert M.antipode_element(M.antipode_element(Y.t(1, 1, 1))) == Y.t(1, 1, 1)
    T = build_T(AlgebraParams(1, 1, 2))
    assert M.antipode(T) == matrix_invert(T)


def test_pi_examples(gl11):
    Y = gl11
    assert M.pi_evaluate(Y.t(1, 2, 1)).render() == "E[1,2]^[1]"
    assert M.pi_evaluate(Y.t(2, 1, 1)).render() == "-E[2,1]^[1]"
    assert M.pi_evaluate(Y.t(1, 1, 2)).is_zero()


def test_iota_is_a_section_of_pi():
    U = gl_superalgebra(2, 1)
    P1 = tensor_power(U, 1)
    for i in range(1, 4):
        for j in range(1, 4):
            assert M.pi_evaluate(M.iota(U.E(i, j))) == P1.embed(U.E(i, j), 1)


def test_kappa_examples(gl11):
    Y = gl11
    assert M.kappa_evaluate(Y.t(1, 1, 2), 2).render() == "E[1,1]^[1]*E[1,1]^[2] - E[1,2]^[1]*E[2,1]^[2]"
    for l in (1, 2, 3):
        for r in range(l + 1, l + 3):
            assert M.kappa_evaluate(Y.t(1, 2, r), l).is_zero()
    for c in Y.generators(1):
        g = Y.gen(c)
        assert M.kappa_evaluate(g, 1) == M.pi_evaluate(g)


@pytest.mark.parametrize("mn", SMALL)
def test_kappa_factorization(mn):
    assert M.check_kappa_factorization(AlgebraParams(*mn, 3), 3).passed


def test_kappa_pbw_rank_gl11():
    assert M.kappa_pbw_rank(AlgebraParams(1, 1), 3, 3) == (49, 49)


def test_rho_involution_on_random_elements(gl21, rng):
    Y = gl21
    for _ in range(10):
        e = Y.reduce(random_element(Y, rng, max_deg1=4))
        img = M.rho_map(e)
        assert img.system is yangian(1, 2)
        assert M.rho_map(img) == e


@pytest.mark.parametrize("mn", SMALL)
def test_involutions(mn):
    assert M.check_involutions(AlgebraParams(*mn, 3)).passed


def test_omega_on_matrix():
    T = build_T(AlgebraParams(1, 1, 3))
    W = M.omega_map(T)
    Y = T.ring
    assert W.entry(1, 1).coeffs[1] == Y.t(1, 1, 1)
    assert M.omega_map(W) == T


def test_zeta_examples(gl11):
    Y = gl11
    assert M.zeta_map(Y.t(1, 1, 1)) == -Y.t(2, 2, 1)


@pytest.mark.parametrize("mn", SMALL)
def test_zeta_gauss(mn):
    assert M.check_zeta_gauss(AlgebraParams(*mn, 3)).passed


@pytest.mark.parametrize("mn", SMALL)
def test_coproduct_twist(mn):
    assert M.check_coproduct_twist(AlgebraParams(*mn, 3)).passed


@pytest.mark.parametrize("mn", SMALL)
def test_hopf_axioms(mn):
    p = AlgebraParams(*mn, 3)
    assert M.check_coassociativity(p).passed
    assert M.check_counit(p).passed


@pytest.mark.parametrize("mn", SMALL)
def test_psi_shift(mn):
    assert M.check_psi_shift(AlgebraParams(*mn, 3), 1).passed


def test_psi_zero_is_identity(gl11, rng):
    e = gl11.reduce(random_element(gl11, rng, max_deg1=3))
    assert M.psi_map(e, 0) == e
    with pytest.raises(ValueError):
        M.psi_map(e, -1)


def test_psi_tprime_example(gl11):
    Z = yangian(2, 1)
    for i in (1, 2):
        for j in (1, 2):
            for r in (1, 2):
                assert M.psi_map(M.tprime(gl11, i, j, r), 1) == M.tprime(Z, 1 + i, 1 + j, r)


def test_mu_examples(gl11):
    Y = gl11
    lam = Fraction(5, 3)
    assert M.mu_f(Y.t(1, 1, 1), [1, lam]) == Y.t(1, 1, 1) + lam
    assert M.mu_f(Y.t(1, 2, 1), [1, lam]) == Y.t(1, 2, 1)
    e = Y.reduce(Y.t(1, 1, 2) * Y.t(2, 1, 1))
    assert M.mu_f(e, [1]) == e
    with pytest.raises(ValueError):
        M.mu_f(e, [2, 1])
    with pytest.raises(ValueError):
        M.mu_f(e, USeries([Y.one, Y.one], 1, Y))


@pytest.mark.parametrize("name", ["rho", "omega", "zeta", "psi1", "mu", "delta"])
def test_homomorphism_property(name):
    for mn in SMALL:
        Y = yangian(*mn)
        hom = {
            "rho": lambda: M.rho(Y),
            "omega": lambda: M.omega(Y),
            "zeta": lambda: M.zeta(Y),
            "psi1": lambda: M.psi(Y, 1),
            "mu": lambda: M.mu(Y, [1, 2, Fraction(-1, 2), 3]),
            "delta": lambda: M._coproduct_hom(Y),
        }[name]()
        assert M.check_homomorphism(hom, 3).passed


def test_pi_is_a_homomorphism():
    for mn in SMALL:
        assert M.check_homomorphism(M._pi(yangian(*mn)), 2).passed


def test_maps_tag_their_target(gl21):
    img = M.zeta_map(gl21.t(1, 1, 1))
    with pytest.raises(ParamsMismatch):
        img + gl21.t(1, 1, 1)
