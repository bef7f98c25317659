"""Hopf structure and the maps between super Yangians.

Every map here is a (super) algebra homomorphism given by its values on
generators, applied to a normal-form element by multiplying images in the
target.  The exception is the antipode, which is an anti-homomorphism.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import sympy
from sympy.polys.matrices import DomainMatrix

from .core import AlgebraParams, Element, ParamsMismatch, as_scalar
from .normal_form import SuperYangian, yangian
from .report import RelationReport
from .rewriting import RewritingSystem
from .series import QQ, USeries
from .tensor import GlSuperalgebra, TensorPower, gl_superalgebra, tensor_power
from .tmatrix import TMatrix, build_T, gauss_decompose, matrix_invert

__all__ = [
    "Homomorphism",
    "TensorElement",
    "TensorUEAElement",
    "antipode",
    "antipode_element",
    "check_coassociativity",
    "check_counit",
    "check_coproduct_twist",
    "check_homomorphism",
    "check_involutions",
    "check_kappa_factorization",
    "check_psi_shift",
    "check_zeta_gauss",
    "coproduct",
    "counit",
    "iota",
    "iterated_coproduct",
    "kappa_evaluate",
    "kappa_pbw_rank",
    "kappa_via_coproduct",
    "mu_f",
    "omega_map",
    "phi_map",
    "pi_evaluate",
    "psi_map",
    "psi_quasideterminant",
    "rho_map",
    "tprime",
    "zeta_map",
]

# Elements of tensor powers are plain Elements of a TensorPower system.
TensorElement = Element
TensorUEAElement = Element


class Homomorphism:
    """Algebra map ``source -> target`` defined on generator codes."""

    def __init__(self, source: RewritingSystem, target: RewritingSystem,
                 image: Callable[[int], Element], name: str = "hom"):
        self.source = source
        self.target = target
        self._image = image
        self._cache: Dict[int, Element] = {}
        self.name = name

    def __repr__(self):
        return f"<{self.name}: {self.source!r} -> {self.target!r}>"

    def image(self, code: int) -> Element:
        hit = self._cache.get(code)
        if hit is None:
            hit = self._image(code)
            if hit.system is not self.target:
                raise ParamsMismatch(f"{self.name}: image lands in {hit.system!r}")
            self._cache[code] = hit
        return hit

    def __call__(self, e: Element) -> Element:
        if e.system is not self.source:
            raise ParamsMismatch(f"{self.name} expects an element of {self.source!r}, got {e.system!r}")
        T = self.target
        out = T.zero
        prefix: Dict[tuple, Element] = {(): T.one}
        for w, c in sorted(e.terms.items()):
            # reuse the longest cached prefix
            k = len(w)
            while w[:k] not in prefix:
                k -= 1
            acc = prefix[w[:k]]
            for idx in range(k, len(w)):
                acc = T.mul(acc, self.image(w[idx]))
                prefix[w[: idx + 1]] = acc
            out = out + acc.scale(c)
        return out

    def then(self, other: "Homomorphism", name: Optional[str] = None) -> "Homomorphism":
        """``other o self``."""
        if other.source is not self.target:
            raise ParamsMismatch("cannot compose: target and source differ")
        return Homomorphism(self.source, other.target, lambda c: other(self.image(c)),
                            name or f"{other.name}.{self.name}")


# --- entries of T(u)^{-1} -----------------------------------------------------------

_TPRIME: Dict[SuperYangian, TMatrix] = {}


def tprime(Y: SuperYangian, i: int, j: int, r: int) -> Element:
    """Coefficient t'_ij^(r) of T(u)^{-1}."""
    if r == 0:
        return Y.one if i == j else Y.zero
    have = _TPRIME.get(Y)
    if have is None or have.N < r:
        N = max(r, 4 if have is None else 2 * have.N)
        have = matrix_invert(build_T(AlgebraParams(Y.m, Y.n, N)))
        _TPRIME[Y] = have
    return have.entry(i, j).coeffs[r]


def _swapped(Y: SuperYangian) -> SuperYangian:
    return yangian(Y.n, Y.m)


def _alg(x) -> SuperYangian:
    if isinstance(x, SuperYangian):
        return x
    if isinstance(x, Element):
        return x.system
    return yangian(x.m, x.n)


# --- inter-Yangian maps ------------------------------------------------------------

_HOMS: Dict[tuple, Homomorphism] = {}


def _memo(key, build):
    h = _HOMS.get(key)
    if h is None:
        h = build()
        _HOMS[key] = h
    return h


def rho(Y: SuperYangian) -> Homomorphism:
    """t_ij(u) -> t_{D+1-i,D+1-j}(-u) into Y(gl_{n|m})."""
    D, Z = Y.size, _swapped(Y)

    def img(c):
        i, j, r = Y.decode(c)
        return Z.t(D + 1 - i, D + 1 - j, r).scale((-1) ** r)

    return _memo(("rho", Y), lambda: Homomorphism(Y, Z, img, "rho"))


def omega(Y: SuperYangian) -> Homomorphism:
    """T(u) -> T(-u)^{-1}."""

    def img(c):
        i, j, r = Y.decode(c)
        return tprime(Y, i, j, r).scale((-1) ** r)

    return _memo(("omega", Y), lambda: Homomorphism(Y, Y, img, "omega"))


def zeta(Y: SuperYangian) -> Homomorphism:
    """rho o omega: t_ij(u) -> t'_{D+1-i,D+1-j}(u) in Y(gl_{n|m})."""
    D, Z = Y.size, _swapped(Y)

    def img(c):
        i, j, r = Y.decode(c)
        return tprime(Z, D + 1 - i, D + 1 - j, r)

    return _memo(("zeta", Y), lambda: Homomorphism(Y, Z, img, "zeta"))


def phi(Y: SuperYangian, k: int) -> Homomorphism:
    """Index shift t_ij(u) -> t_{k+i,k+j}(u) into Y(gl_{m+k|n})."""
    Z = yangian(Y.m + k, Y.n)

    def img(c):
        i, j, r = Y.decode(c)
        return Z.t(i + k, j + k, r)

    return _memo(("phi", Y, k), lambda: Homomorphism(Y, Z, img, f"phi{k}"))


def psi(Y: SuperYangian, k: int) -> Homomorphism:
    """omega_{m+k|n} o phi_k o omega_{m|n}."""
    if k < 0:
        raise ValueError("k must be non-negative")
    if k == 0:
        return _memo(("id", Y), lambda: Homomorphism(Y, Y, Y.gen, "id"))
    Z = yangian(Y.m + k, Y.n)
    return _memo(("psi", Y, k),
                 lambda: omega(Y).then(phi(Y, k)).then(omega(Z), f"psi{k}"))


def mu(Y: SuperYangian, f) -> Homomorphism:
    """T(u) -> f(u) T(u) for a scalar series f with constant term 1."""
    coeffs = _scalar_series(f)

    def img(c):
        i, j, r = Y.decode(c)
        out = Y.zero
        for p in range(r + 1):
            fp = coeffs[p] if p < len(coeffs) else 0
            if fp:
                out = out + Y.t(i, j, r - p).scale(fp)
        return out

    return Homomorphism(Y, Y, img, "mu_f")


def _scalar_series(f) -> List:
    if isinstance(f, USeries):
        if f.ring is not QQ:
            raise ValueError("mu_f needs a series with scalar coefficients")
        cs = list(f.coeffs)
    else:
        cs = [as_scalar(x) for x in f]
    if not cs or cs[0] != 1:
        raise ValueError("f must have constant term 1")
    return cs


def rho_map(e: Element) -> Element:
    return rho(e.system)(e)


def omega_map(x):
    """On a TMatrix: T(-u)^{-1}.  On an Element: the induced automorphism."""
    if isinstance(x, TMatrix):
        inv = x.inverse()
        rows = [[USeries([c.scale((-1) ** r) for r, c in enumerate(s.coeffs)], s.N, s.ring)
                 for s in row] for row in inv.rows]
        return TMatrix(rows, x.params, x.ring)
    return omega(x.system)(x)


def zeta_map(e: Element) -> Element:
    return zeta(e.system)(e)


def phi_map(e: Element, k: int) -> Element:
    return phi(e.system, k)(e)


def psi_map(e: Element, k: int) -> Element:
    return psi(e.system, k)(e)


def mu_f(e: Element, f) -> Element:
    return mu(e.system, f)(e)


def psi_quasideterminant(params: AlgebraParams, k: int, i: int, j: int) -> USeries:
    """psi_k(t_ij(u)) as the quasideterminant of T rows 1..k,k+i / cols 1..k,k+j."""
    from .tmatrix import quasideterminant

    big = AlgebraParams(params.m + k, params.n, params.N)
    T = build_T(big)
    head = list(range(1, k + 1))
    X = T.submatrix(head + [k + i], head + [k + j])
    return quasideterminant(X, k + 1, k + 1, "schur")


# --- Hopf structure ------------------------------------------------------------------

def _coproduct_hom(Y: SuperYangian) -> Homomorphism:
    P = tensor_power(Y, 2)

    def img(c):
        i, j, r = Y.decode(c)
        out = P.zero
        for k in range(1, Y.size + 1):
            for p in range(r + 1):
                a, b = Y.t(i, k, p), Y.t(k, j, r - p)
                if a.is_zero() or b.is_zero():
                    continue
                out = out + P.mul(P.embed(a, 1), P.embed(b, 2))
        return out

    return _memo(("delta", Y), lambda: Homomorphism(Y, P, img, "Delta"))


def coproduct(e: Element) -> Element:
    """Delta into Y (x) Y (a TensorPower of the same algebra)."""
    return _coproduct_hom(e.system)(e)


def _delta_on_slot(Y: SuperYangian, l: int, slot: int) -> Homomorphism:
    """id^(slot-1) (x) Delta (x) id^(l-slot): Y^(x)l -> Y^(x)(l+1)."""
    src, dst = tensor_power(Y, l), tensor_power(Y, l + 1)
    split = dst.embed

    def img(c):
        s, base = src.split_code(c)
        g = Y.gen(base)
        if s < slot:
            return split(g, s)
        if s > slot:
            return split(g, s + 1)
        out = dst.zero
        for (w1, w2), coef in tensor_power(Y, 2).split(coproduct(g)).items():
            a = dst.one
            for x in w1:
                a = dst.mul(a, split(Y.gen(x), s))
            for x in w2:
                a = dst.mul(a, split(Y.gen(x), s + 1))
            out = out + a.scale(coef)
        return out

    return _memo(("delta_slot", Y, l, slot), lambda: Homomorphism(src, dst, img, f"Delta@{slot}"))


def iterated_coproduct(e: Element, l: int) -> Element:
    """Delta^{(l)} into Y^(x)l, iterating Delta on the first slot."""
    Y = e.system
    if l < 1:
        raise ValueError("l must be positive")
    cur = tensor_power(Y, 1).embed(e, 1)
    for k in range(1, l):
        cur = _delta_on_slot(Y, k, 1)(cur)
    return cur


def counit(e: Element):
    """Every positive-level generator goes to 0."""
    if not e.system.is_normal(e):
        e = e.system.reduce(e)
    return e.constant()


def antipode(T: TMatrix) -> TMatrix:
    return matrix_invert(T)


def antipode_element(e: Element) -> Element:
    """S(t_ij^(r)) = t'_ij^(r), extended as a super anti-homomorphism."""
    Y = e.system
    out = Y.zero
    for w, c in e.terms.items():
        acc = Y.one
        odd = 0
        for g in reversed(w):
            i, j, r = Y.decode(g)
            acc = Y.mul(acc, tprime(Y, i, j, r))
        odd = sum(Y.parity(g) for g in w)
        sign = -1 if (odd * (odd - 1) // 2) % 2 else 1
        out = out + acc.scale(sign * c)
    return out


def _flip(Y: SuperYangian) -> Homomorphism:
    P = tensor_power(Y, 2)

    def img(c):
        s, base = P.split_code(c)
        return P.gen(P.lift(base, 3 - s))

    return _memo(("tau", Y), lambda: Homomorphism(P, P, img, "tau"))


def _slotwise(hom: Homomorphism, l: int) -> Homomorphism:
    src, dst = tensor_power(hom.source, l), tensor_power(hom.target, l)

    def img(c):
        s, base = src.split_code(c)
        return dst.embed(hom.image(base), s)

    return _memo(("slotwise", id(hom), l), lambda: Homomorphism(src, dst, img, f"{hom.name}^(x){l}"))


# --- evaluation into U(gl) ------------------------------------------------------------

def _pi(Y: SuperYangian) -> Homomorphism:
    U = gl_superalgebra(Y.m, Y.n)

    def img(c):
        i, j, r = Y.decode(c)
        if r > 1:
            return U.zero
        return U.E(i, j).scale(-1 if Y.index_parity(i) else 1)

    return _memo(("pi", Y), lambda: Homomorphism(Y, U, img, "pi"))


def pi_evaluate(e: Element) -> Element:
    """pi into U(gl_{m|n}), returned in the one-slot tensor power."""
    U1 = tensor_power(gl_superalgebra(e.system.m, e.system.n), 1)
    return U1.embed(_pi(e.system)(e), 1)


def iota(x: Element) -> Element:
    """U(gl_{m|n}) -> Y: E_ij -> (-1)^{p(i)} t_ij^(1)."""
    U = x.system
    if isinstance(U, TensorPower):
        if U.l != 1:
            raise ValueError("iota takes a single-slot element")
        x = Element._raw(U.base, {tuple(g % (1 << 22) for g in w): c for w, c in x.terms.items()})
        U = U.base
    Y = yangian(U.m, U.n)

    def img(c):
        i, j = U.decode(c)
        return Y.t(i, j, 1).scale(-1 if U._par[i] else 1)

    return _memo(("iota", U), lambda: Homomorphism(U, Y, img, "iota"))(x)


def _kappa(Y: SuperYangian, l: int) -> Homomorphism:
    U = gl_superalgebra(Y.m, Y.n)
    P = tensor_power(U, l)
    D = Y.size

    def img(c):
        i, j, r = Y.decode(c)
        out = P.zero
        if r > l:
            return out
        for slots in itertools.combinations(range(1, l + 1), r):
            for mids in itertools.product(range(1, D + 1), repeat=r - 1):
                chain = (i,) + mids + (j,)
                sign = sum(Y.index_parity(x) for x in chain[:-1]) & 1
                word = tuple(P.lift(U.code(chain[a], chain[a + 1]), s) for a, s in enumerate(slots))
                out = out + Element._raw(P, {word: -1 if sign else 1})
        return P.reduce(out)

    return _memo(("kappa", Y, l), lambda: Homomorphism(Y, P, img, f"kappa{l}"))


def kappa_evaluate(e: Element, l: int) -> Element:
    """kappa_l from the closed chain-sum formula, into U(gl_{m|n})^(x)l."""
    if l < 1:
        raise ValueError("l must be positive")
    return _kappa(e.system, l)(e)


def kappa_via_coproduct(e: Element, l: int) -> Element:
    """(pi (x) ... (x) pi) o Delta^{(l)}: the independent route to kappa_l."""
    return _slotwise(_pi(e.system), l)(iterated_coproduct(e, l))


def check_kappa_factorization(params: AlgebraParams, l: int) -> RelationReport:
    Y = yangian(params.m, params.n)
    rep = RelationReport("kappa-factorization", params.m, params.n, params.N)
    for c in Y.generators(params.N):
        g = Y.gen(c)
        i, j, r = Y.decode(c)
        rep.record("kappa", (i, j), (r, l), kappa_evaluate(g, l) - kappa_via_coproduct(g, l))
    return rep


def kappa_pbw_rank(params: AlgebraParams, l: int, max_deg1: int) -> Tuple[int, int]:
    """(rank, count) for the kappa_l images of PBW monomials with deg_1 <= max_deg1."""
    Y = yangian(params.m, params.n)
    K = _kappa(Y, l)
    basis = Y.pbw_basis(max_deg1)
    images = [K(Element._raw(Y, {w: 1})) for w in basis]
    cols: Dict[tuple, int] = {}
    for img in images:
        for w in img.terms:
            cols.setdefault(w, len(cols))
    rows = []
    for img in images:
        row = [sympy.Integer(0)] * len(cols)
        for w, c in img.terms.items():
            c = Fraction(c)
            row[cols[w]] = sympy.Rational(c.numerator, c.denominator)
        rows.append(row)
    if not rows or not cols:
        return 0, len(basis)
    M = DomainMatrix.from_list_sympy(len(rows), len(cols), rows).convert_to(sympy.QQ)
    return M.rank(), len(basis)


# --- consistency checks ---------------------------------------------------------------

def check_homomorphism(hom: Homomorphism, N: int, name: Optional[str] = None) -> RelationReport:
    """Images of both sides of every defining relation with r + s <= N agree."""
    Y = hom.source
    T = hom.target
    D = Y.size
    rep = RelationReport(name or hom.name, Y.m, Y.n, N)
    for i, j, k, l in itertools.product(range(1, D + 1), repeat=4):
        for r in range(1, N):
            for s in range(1, N - r + 1):
                lhs = T.supercommutator(hom(Y.t(i, j, r)), hom(Y.t(k, l, s)))
                rhs = hom(Y.defining_commutator(i, j, r, k, l, s))
                rep.record("defining", (i, j, k, l), (r, s), lhs - rhs)
    return rep


def check_coassociativity(params: AlgebraParams) -> RelationReport:
    Y = yangian(params.m, params.n)
    rep = RelationReport("coassociativity", params.m, params.n, params.N)
    left, right = _delta_on_slot(Y, 2, 1), _delta_on_slot(Y, 2, 2)
    for c in Y.generators(params.N):
        i, j, r = Y.decode(c)
        d = coproduct(Y.gen(c))
        rep.record("coassoc", (i, j), (r,), left(d) - right(d))
    return rep


def check_counit(params: AlgebraParams) -> RelationReport:
    Y = yangian(params.m, params.n)
    P = tensor_power(Y, 2)
    rep = RelationReport("counit", params.m, params.n, params.N)
    for c in Y.generators(params.N):
        i, j, r = Y.decode(c)
        split = P.split(coproduct(Y.gen(c)))
        left, right = Y.zero, Y.zero
        for (w1, w2), coef in split.items():
            if not w1:
                left = left + Element._raw(Y, {w2: coef})
            if not w2:
                right = right + Element._raw(Y, {w1: coef})
        g = Y.gen(c)
        rep.record("eps(x)id", (i, j), (r,), left - g)
        rep.record("id(x)eps", (i, j), (r,), right - g)
    return rep


def check_zeta_gauss(params: AlgebraParams) -> RelationReport:
    """zeta: d_i -> d_{D+1-i}^{-1}, e_k -> -f_{D-k}, f_k -> -e_{D-k}."""
    Y = yangian(params.m, params.n)
    Z = _swapped(Y)
    D, N = params.size, params.N
    z = zeta(Y)
    src = gauss_decompose(build_T(params))
    dst = gauss_decompose(build_T(params.swapped()))
    rep = RelationReport("zeta-gauss", params.m, params.n, N)
    for r in range(1, N + 1):
        for i in range(1, D + 1):
            rep.record("d", (i,), (r,), z(src.dc(i, r)) - dst.dpc(D + 1 - i, r))
        for k in range(1, D):
            rep.record("e", (k,), (r,), z(src.ec(k, k + 1, r)) + dst.fc(D + 1 - k, D - k, r))
            rep.record("f", (k,), (r,), z(src.fc(k + 1, k, r)) + dst.ec(D - k, D + 1 - k, r))
    return rep


def check_coproduct_twist(params: AlgebraParams) -> RelationReport:
    """(zeta (x) zeta) o Delta = tau o Delta o zeta on generators up to level N."""
    Y = yangian(params.m, params.n)
    Z = _swapped(Y)
    z = zeta(Y)
    zz = _slotwise(z, 2)
    tau = _flip(Z)
    rep = RelationReport("coproduct-twist", params.m, params.n, params.N)
    PY = tensor_power(Y, 2)
    p = Y.index_parity
    D = Y.size
    for c in Y.generators(params.N):
        i, j, r = Y.decode(c)
        g = Y.gen(c)
        rep.record("twist", (i, j), (r,), zz(coproduct(g)) - tau(coproduct(z(g))))
        # Delta(t'_ij) = sum_k t'_kj (x) t'_ik with the displayed sign
        rhs = PY.zero
        for k in range(1, D + 1):
            sg = -1 if ((p(i) + p(k)) * (p(j) + p(k))) & 1 else 1
            for q in range(r + 1):
                a, b = tprime(Y, k, j, q), tprime(Y, i, k, r - q)
                if a.is_zero() or b.is_zero():
                    continue
                rhs = rhs + PY.mul(PY.embed(a, 1), PY.embed(b, 2)).scale(sg)
        rep.record("delta-tprime", (i, j), (r,), coproduct(tprime(Y, i, j, r)) - rhs)
    return rep


def check_involutions(params: AlgebraParams) -> RelationReport:
    """rho o rho and omega o omega are the identity on generators up to level N."""
    Y = yangian(params.m, params.n)
    rr = rho(Y).then(rho(_swapped(Y)))
    ww = omega(Y).then(omega(Y))
    rep = RelationReport("involutions", params.m, params.n, params.N)
    for c in Y.generators(params.N):
        i, j, r = Y.decode(c)
        g = Y.gen(c)
        rep.record("rho^2", (i, j), (r,), rr(g) - g)
        rep.record("omega^2", (i, j), (r,), ww(g) - g)
    T = build_T(params)
    back = omega_map(omega_map(T))
    for i in range(1, params.size + 1):
        for j in range(1, params.size + 1):
            for r, (a, b) in enumerate(zip(back.entry(i, j).coeffs, T.entry(i, j).coeffs)):
                rep.record("omega^2 on T", (i, j), (r,), a - b)
    return rep


def check_psi_shift(params: AlgebraParams, k: int = 1) -> RelationReport:
    """psi_k sends d_l, e_l, f_l to d_{k+l}, e_{k+l}, f_{k+l} and t'_ij to t'_{k+i,k+j}.

    Also compares psi_k(t_ij(u)) with the quasideterminant of the bordered block.
    """
    if k < 1:
        raise ValueError("k must be positive")
    Y = yangian(params.m, params.n)
    big = AlgebraParams(params.m + k, params.n, params.N)
    Z = yangian(big.m, big.n)
    h = psi(Y, k)
    src = gauss_decompose(build_T(params))
    dst = gauss_decompose(build_T(big))
    D, N = params.size, params.N
    rep = RelationReport("psi-shift", params.m, params.n, N)
    for r in range(1, N + 1):
        for l in range(1, D + 1):
            rep.record("d", (l,), (r,), h(src.dc(l, r)) - dst.dc(k + l, r))
        for l in range(1, D):
            rep.record("e", (l,), (r,), h(src.ec(l, l + 1, r)) - dst.ec(k + l, k + l + 1, r))
            rep.record("f", (l,), (r,), h(src.fc(l + 1, l, r)) - dst.fc(k + l + 1, k + l, r))
        for i in range(1, D + 1):
            for j in range(1, D + 1):
                rep.record("t'", (i, j), (r,), h(tprime(Y, i, j, r)) - tprime(Z, k + i, k + j, r))
    for i in range(1, D + 1):
        for j in range(1, D + 1):
            q = psi_quasideterminant(params, k, i, j)
            for r in range(1, N + 1):
                rep.record("quasideterminant", (i, j), (r,), h(Y.t(i, j, r)) - q.coeffs[r])
    return rep
