"""Property-based checks of the rewriting engine and the series arithmetic."""

import random
from fractions import Fraction

from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from superyangian.core import AlgebraParams
from superyangian.normal_form import yangian
from superyangian.series import USeries, series_invert, series_shift

from conftest import CONFIGS, random_element

SETTINGS = settings(max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow])

configs = st.sampled_from(CONFIGS)
seeds = st.integers(0, 2**32 - 1)
rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)


def elements(mn, seed, k, max_deg1=4):
    Y = yangian(*mn)
    rng = random.Random(seed)
    return Y, [random_element(Y, rng, max_deg1=max_deg1, max_terms=2, max_len=3) for _ in range(k)]


def generator(Y, rng, max_r=2):
    D = Y.size
    i, j = rng.randint(1, D), rng.randint(1, D)
    return Y.t(i, j, rng.randint(1, max_r)), (Y.index_parity(i) + Y.index_parity(j)) % 2


@SETTINGS
@given(configs, seeds)
def test_reduce_idempotent(mn, seed):
    Y, (a,) = elements(mn, seed, 1, 6)
    r = Y.reduce(a)
    assert Y.reduce(r) == r
    assert Y.is_normal(r)


@SETTINGS
@given(configs, seeds, rationals)
def test_reduce_linear(mn, seed, c):
    Y, (a, b) = elements(mn, seed, 2)
    assert Y.reduce(a + b.scale(c)) == Y.reduce(a) + Y.reduce(b).scale(c)


@SETTINGS
@given(configs, seeds)
def test_product_associative(mn, seed):
    Y, (a, b, c) = elements(mn, seed, 3, 3)
    assert Y.mul(Y.mul(a, b), c) == Y.mul(a, Y.mul(b, c))


@SETTINGS
@given(configs, seeds)
def test_reduce_respects_products(mn, seed):
    Y, (a, b) = elements(mn, seed, 2)
    assert Y.reduce(a * b) == Y.mul(Y.reduce(a), Y.reduce(b))


@SETTINGS
@given(configs, seeds)
def test_super_jacobi(mn, seed):
    Y = yangian(*mn)
    rng = random.Random(seed)
    (a, pa), (b, pb), (c, _) = (generator(Y, rng) for _ in range(3))
    br = Y.supercommutator
    lhs = br(a, br(b, c))
    rhs = br(br(a, b), c) + br(b, br(a, c)).scale((-1) ** (pa * pb))
    assert lhs == rhs


@SETTINGS
@given(configs, seeds)
def test_supercommutator_antisymmetry(mn, seed):
    Y = yangian(*mn)
    rng = random.Random(seed)
    (a, pa), (b, pb) = generator(Y, rng, 3), generator(Y, rng, 3)
    assert Y.supercommutator(a, b) == -Y.supercommutator(b, a).scale((-1) ** (pa * pb))


def scalar_series(draw_coeffs, N):
    return USeries([Fraction(1)] + list(draw_coeffs[:N]), N)


series_coeffs = st.lists(rationals, min_size=6, max_size=6)


@SETTINGS
@given(series_coeffs, st.integers(1, 6))
def test_invert_is_two_sided(cs, N):
    s = scalar_series(cs, N)
    inv = series_invert(s)
    assert s * inv == USeries.one(N) == inv * s
    assert series_invert(inv) == s


@SETTINGS
@given(series_coeffs, series_coeffs, rationals, rationals)
def test_shift_properties(cs, ds, a, b):
    N = 5
    s, t = scalar_series(cs, N), scalar_series(ds, N)
    assert series_shift(series_shift(s, a), b) == series_shift(s, a + b)
    assert series_shift(s * t, a) == series_shift(s, a) * series_shift(t, a)
    assert series_shift(series_invert(s), a) == series_invert(series_shift(s, a))
    assert series_shift(s, 0) == s


@SETTINGS
@given(configs, st.integers(0, 10**6))
def test_inverse_matrix_series(mn, seed):
    # T(u) T(u)^{-1} = 1 holds coefficientwise for the generic T of small order
    from superyangian.tmatrix import build_T

    p = AlgebraParams(*mn, 2)
    T = build_T(p)
    Tinv = T.inverse()
    Y = T.ring
    rng = random.Random(seed)
    i, j = rng.randint(1, p.size), rng.randint(1, p.size)
    acc = USeries.zero(2, Y)
    for k in range(1, p.size + 1):
        acc = acc + T.entry(i, k) * Tinv.entry(k, j)
    expect = USeries.one(2, Y) if i == j else USeries.zero(2, Y)
    assert acc == expect
