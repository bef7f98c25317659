"""The quantum Berezinian b(u) and the central / sl-type checks built on it."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import List, Optional

from .core import AlgebraParams, Element
from .morphisms import mu
from .normal_form import SuperYangian, yangian
from .report import RelationReport
from .series import QQ, USeries, factorial_root, series_shift
from .tmatrix import GaussData, TMatrix, build_T, gauss_decompose

__all__ = [
    "Berezinian",
    "berezinian_product_form",
    "berezinian_root",
    "berezinian_sum_form",
    "centrality_check",
    "leading_term_check",
    "sl_generators_fixed",
]


@dataclass
class Berezinian:
    series: USeries
    params: AlgebraParams

    def coeff(self, r: int) -> Element:
        return self.series.coeffs[r]

    def __eq__(self, other):
        if not isinstance(other, Berezinian):
            return NotImplemented
        return self.series == other.series

    __hash__ = None

    def to_json(self) -> List[str]:
        return self.series.to_json()


def _perm_sign(p) -> int:
    sign = 1
    p = list(p)
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] > p[j]:
                sign = -sign
    return sign


def berezinian_sum_form(params: AlgebraParams, T: Optional[TMatrix] = None,
                        Tp: Optional[TMatrix] = None) -> Berezinian:
    """Double sum over S_m and S_n of shifted t and t' entries."""
    m, n, N = params.m, params.n, params.N
    T = T or build_T(params)
    Y = T.ring
    first = USeries.zero(N, Y)
    for rho in itertools.permutations(range(1, m + 1)):
        term = USeries.one(N, Y)
        for a in range(m):
            term = term * series_shift(T.entry(rho[a], a + 1), -a)
        first = first + term * _perm_sign(rho)
    if m == 0:
        first = USeries.one(N, Y)
    if n:
        Tp = Tp or T.inverse()
        second = USeries.zero(N, Y)
        for sigma in itertools.permutations(range(1, n + 1)):
            term = USeries.one(N, Y)
            for b in range(n):
                term = term * series_shift(Tp.entry(m + b + 1, m + sigma[b]), -(m - 1) + b)
            second = second + term * _perm_sign(sigma)
    else:
        second = USeries.one(N, Y)
    return Berezinian(first * second, params)


def berezinian_product_form(g: GaussData, params: Optional[AlgebraParams] = None) -> Berezinian:
    """d_1(u) ... d_m(u-m+1) d_{m+1}(u-m+1)^{-1} ... d_{m+n}(u-m+n)^{-1}."""
    params = params or g.params
    m, n, N = params.m, params.n, params.N
    out = USeries.one(N, g.ring)
    for i in range(1, m + 1):
        out = out * series_shift(g.d_series(i), -(i - 1))
    for b in range(n):
        out = out * series_shift(g.dinv_series(m + b + 1), -(m - 1) + b)
    return Berezinian(out, params)


def _berezinian(params: AlgebraParams) -> Berezinian:
    return berezinian_product_form(gauss_decompose(build_T(params)), params)


def centrality_check(params: AlgebraParams, b: Optional[Berezinian] = None) -> RelationReport:
    """[b_r, t_ij^(s)] = 0 for r + s <= N."""
    b = b or _berezinian(params)
    Y = yangian(params.m, params.n)
    D, N = params.size, params.N
    rep = RelationReport("centrality", params.m, params.n, N)
    for r in range(1, N):
        br = b.coeff(r)
        for s in range(1, N - r + 1):
            for i in range(1, D + 1):
                for j in range(1, D + 1):
                    rep.record("central", (i, j), (r, s), Y.supercommutator(br, Y.t(i, j, s)))
    return rep


def signed_diagonal(Y: SuperYangian, r: int) -> Element:
    out = Y.zero
    for i in range(1, Y.size + 1):
        t = Y.t(i, i, r)
        out = out - t if Y.index_parity(i) else out + t
    return out


def leading_term_check(params: AlgebraParams, r: int, b: Optional[Berezinian] = None) -> RelationReport:
    """Top deg_2 part of b_r equals the signed diagonal sum of t_ii^(r)."""
    if not 1 <= r <= params.N:
        raise ValueError("need 1 <= r <= N")
    b = b or _berezinian(params)
    Y = yangian(params.m, params.n)
    br = b.coeff(r)
    top = br.max_degree(Y.deg2)
    expect = signed_diagonal(Y, r)
    rep = RelationReport("leading-term", params.m, params.n, params.N)
    if top != r - 1:
        rep.record("deg2", (), (r,), br.part(lambda w: Y.deg2(w) == top))
        return rep
    rep.record("leading", (), (r,), br.part(lambda w: Y.deg2(w) == r - 1) - expect)
    return rep


def _lift_scalar(f: USeries, Y: SuperYangian, N: int) -> USeries:
    return USeries([Y.scalar(c) for c in f.coeffs[: N + 1]], N, Y)


def sl_generators_fixed(params: AlgebraParams, f, g: Optional[GaussData] = None) -> RelationReport:
    """mu_f fixes d_1^{-1} d_{i+1}, e_i, f_i and scales d_1 by f."""
    Y = yangian(params.m, params.n)
    f = f if isinstance(f, USeries) else USeries(f, params.N)
    g = g or gauss_decompose(build_T(params))
    h = mu(Y, f)
    N, D = params.N, params.size
    rep = RelationReport("sl-fixed", params.m, params.n, N)
    scaled = g.d_series(1) * _lift_scalar(f, Y, N)
    for r in range(1, N + 1):
        rep.record("mu(d1)", (1,), (r,), h(g.dc(1, r)) - scaled.coeffs[r])
    for i in range(1, D):
        ratio = g.dinv_series(1) * g.d_series(i + 1)
        for r in range(1, N + 1):
            x = ratio.coeffs[r]
            rep.record("d1^-1 d", (i + 1,), (r,), h(x) - x)
            e = g.ec(i, i + 1, r)
            rep.record("e", (i,), (r,), h(e) - e)
            fi = g.fc(i + 1, i, r)
            rep.record("f", (i,), (r,), h(fi) - fi)
    return rep


def berezinian_root(params: AlgebraParams, f=None, b: Optional[Berezinian] = None):
    """The series b~ with b(u) = b~(u) b~(u-1) ... b~(u-m+n+1), K = m - n.

    Returns ``(root, report)``; the report holds the round trip and, when a
    scalar series ``f`` is given, the check mu_f(b~) = f b~.
    """
    m, n, N = params.m, params.n, params.N
    if m <= n:
        raise ValueError("the factorial root needs m > n")
    K = m - n
    b = b or _berezinian(params)
    Y = yangian(m, n)
    root = factorial_root(b.series, K, check=True)
    rep = RelationReport("berezinian-root", m, n, N)
    prod = USeries.one(N, Y)
    for k in range(K):
        prod = prod * series_shift(root, -k)
    for r in range(N + 1):
        rep.record("round-trip", (), (r,), prod.coeffs[r] - b.series.coeffs[r])
    if f is not None:
        f = f if isinstance(f, USeries) else USeries(f, N)
        h = mu(Y, f)
        fb = root * _lift_scalar(f, Y, N)
        for r in range(1, N + 1):
            rep.record("mu-covariance", (), (r,), h(root.coeffs[r]) - fb.coeffs[r])
    return root, rep
