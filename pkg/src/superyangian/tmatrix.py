"""The generating matrix T(u), its inverse, quasideterminants and T = F D E.

Entries are kept *plain*: ``T.entry(i, j)`` is the series t_ij(u).  The
operator ``sum_ij t_ij(u) (x) E_ij (-1)^{p(j)(p(i)+1)}`` is identified with the
matrix of plain entries, and with that identification ordinary row-by-column
products are the algebra products.  The twisted values are available through
:meth:`TMatrix.twisted` for reference.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .core import AlgebraParams, Element
from .normal_form import SuperYangian, yangian
from .report import RelationReport
from .series import InvertibilityError, USeries, series_invert

__all__ = [
    "GaussData",
    "QuasideterminantError",
    "RecompositionError",
    "SeriesMatrix",
    "TMatrix",
    "build_T",
    "eq5_check",
    "gauss_decompose",
    "matrix_invert",
    "primed_series",
    "quasideterminant",
    "recomposition_mismatches",
    "rtt_residual",
]


class QuasideterminantError(InvertibilityError):
    def __init__(self, msg: str, stage: str):
        super().__init__(f"[{stage}] {msg}")
        self.stage = stage


class RecompositionError(AssertionError):
    """F D E differs from T: a sign or truncation bug."""


class SeriesMatrix:
    """Square array of :class:`USeries` over one ring; indices are 1-based."""

    def __init__(self, rows: Sequence[Sequence[USeries]], ring, N: int):
        self.rows: List[List[USeries]] = [list(r) for r in rows]
        self.size = len(self.rows)
        self.ring = ring
        self.N = N

    @classmethod
    def identity(cls, size: int, ring, N: int) -> "SeriesMatrix":
        return cls([[USeries.one(N, ring) if i == j else USeries.zero(N, ring)
                     for j in range(size)] for i in range(size)], ring, N)

    def entry(self, i: int, j: int) -> USeries:
        return self.rows[i - 1][j - 1]

    def __getitem__(self, ij: Tuple[int, int]) -> USeries:
        return self.entry(*ij)

    def coefficient(self, r: int) -> List[List]:
        return [[s.coeffs[r] for s in row] for row in self.rows]

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "SeriesMatrix":
        return SeriesMatrix([[self.entry(i, j) for j in cols] for i in rows], self.ring, self.N)

    def __mul__(self, other: "SeriesMatrix") -> "SeriesMatrix":
        D = self.size
        out = []
        for i in range(D):
            row = []
            for k in range(D):
                acc = USeries.zero(self.N, self.ring)
                for j in range(D):
                    a, b = self.rows[i][j], other.rows[j][k]
                    if a.is_zero() or b.is_zero():
                        continue
                    acc = acc + a * b
                row.append(acc)
            out.append(row)
        return SeriesMatrix(out, self.ring, min(self.N, other.N))

    def __sub__(self, other: "SeriesMatrix") -> "SeriesMatrix":
        return SeriesMatrix([[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)],
                            self.ring, min(self.N, other.N))

    def __eq__(self, other):
        if not isinstance(other, SeriesMatrix):
            return NotImplemented
        return self.size == other.size and all(
            a == b for r1, r2 in zip(self.rows, other.rows) for a, b in zip(r1, r2))

    __hash__ = None

    def constant_is_identity(self) -> bool:
        one = self.ring.one
        for i, row in enumerate(self.rows):
            for j, s in enumerate(row):
                c = s.coeffs[0]
                if i == j:
                    if c != one:
                        return False
                elif not self.ring.is_zero(c):
                    return False
        return True

    def inverse(self) -> "SeriesMatrix":
        """Two-sided inverse when the constant term is the identity."""
        if not self.constant_is_identity():
            raise InvertibilityError("constant term of the matrix is not the identity")
        D, N, ring = self.size, self.N, self.ring
        A = [self.coefficient(r) for r in range(N + 1)]
        S = [[[ring.one if i == j else ring.zero for j in range(D)] for i in range(D)]]
        for r in range(1, N + 1):
            cur = [[ring.zero] * D for _ in range(D)]
            for p in range(1, r + 1):
                Ap, Sq = A[p], S[r - p]
                for i in range(D):
                    for j in range(D):
                        a = Ap[i][j]
                        if ring.is_zero(a):
                            continue
                        for k in range(D):
                            b = Sq[j][k]
                            if ring.is_zero(b):
                                continue
                            cur[i][k] = cur[i][k] - ring.mul(a, b)
            S.append(cur)
        rows = [[USeries([S[r][i][j] for r in range(N + 1)], N, ring) for j in range(D)]
                for i in range(D)]
        return SeriesMatrix(rows, ring, N)


class TMatrix(SeriesMatrix):
    """T(u) (or a matrix derived from it) over Y(gl_{m|n})."""

    def __init__(self, rows, params: AlgebraParams, ring: Optional[SuperYangian] = None):
        ring = ring or yangian(params.m, params.n)
        super().__init__(rows, ring, params.N)
        self.params = params

    def sign(self, i: int, j: int) -> int:
        p = self.params.parity
        return -1 if (p(j) * (p(i) + 1)) & 1 else 1

    def twisted(self, i: int, j: int) -> USeries:
        """Coefficient of E_ij in the operator form of the matrix."""
        return self.entry(i, j) * self.sign(i, j)

    def _wrap(self, m: SeriesMatrix) -> "TMatrix":
        return TMatrix(m.rows, self.params.with_order(m.N), self.ring)

    def __mul__(self, other):
        return self._wrap(SeriesMatrix.__mul__(self, other))

    def inverse(self) -> "TMatrix":
        return self._wrap(SeriesMatrix.inverse(self))


def build_T(params: AlgebraParams) -> TMatrix:
    Y = yangian(params.m, params.n)
    D, N = params.size, params.N
    rows = [[USeries([Y.t(i, j, r) for r in range(N + 1)], N, Y) for j in range(1, D + 1)]
            for i in range(1, D + 1)]
    return TMatrix(rows, params, Y)


def matrix_invert(T: SeriesMatrix) -> SeriesMatrix:
    """The matrix of t'_ij(u)."""
    return T.inverse()


def quasideterminant(X: SeriesMatrix, i: int, j: int, method: str = "auto") -> USeries:
    """``|X|_ij = ((X^{-1})_ji)^{-1}``.

    ``method="inverse"`` inverts all of X; ``"schur"`` evaluates
    ``x_ij - r_i (X^{ij})^{-1} c_j`` and only needs the minor to be invertible.
    ``"auto"`` uses the full inverse when X has identity constant term.
    """
    D = X.size
    if not (1 <= i <= D and 1 <= j <= D):
        raise IndexError("quasideterminant index out of range")
    if method == "auto":
        method = "inverse" if X.constant_is_identity() else "schur"
    if D == 1:
        return X.entry(1, 1)
    if method == "inverse":
        try:
            Xi = X.inverse()
        except InvertibilityError as exc:
            raise QuasideterminantError(str(exc), "matrix") from None
        try:
            return series_invert(Xi.entry(j, i))
        except InvertibilityError as exc:
            raise QuasideterminantError(str(exc), "entry") from None
    if method == "schur":
        rows = [k for k in range(1, D + 1) if k != i]
        cols = [k for k in range(1, D + 1) if k != j]
        minor = X.submatrix(rows, cols)
        try:
            Mi = minor.inverse()
        except InvertibilityError as exc:
            raise QuasideterminantError(str(exc), "minor") from None
        acc = X.entry(i, j)
        for a, col in enumerate(cols, 1):
            xa = X.entry(i, col)
            if xa.is_zero():
                continue
            for b, row in enumerate(rows, 1):
                m_ab = Mi.entry(a, b)
                yb = X.entry(row, j)
                if m_ab.is_zero() or yb.is_zero():
                    continue
                acc = acc - xa * m_ab * yb
        return acc
    raise ValueError(f"unknown method {method!r}")


@dataclass
class GaussData:
    """d_i(u), their inverses, e_ij(u) (i<j) and f_ji(u) (i<j) for T = F D E."""

    params: AlgebraParams
    ring: SuperYangian
    d: List[USeries]
    d_inv: List[USeries]
    e: Dict[Tuple[int, int], USeries]
    f: Dict[Tuple[int, int], USeries]

    @property
    def size(self) -> int:
        return self.params.size

    @property
    def N(self) -> int:
        return self.params.N

    # series accessors (1-based) ------------------------------------------------
    def d_series(self, i: int) -> USeries:
        return self.d[i - 1]

    def dinv_series(self, i: int) -> USeries:
        return self.d_inv[i - 1]

    def e_series(self, i: int, j: int) -> USeries:
        return self.e[(i, j)]

    def f_series(self, j: int, i: int) -> USeries:
        return self.f[(j, i)]

    def e_simple(self, j: int) -> USeries:
        return self.e[(j, j + 1)]

    def f_simple(self, j: int) -> USeries:
        return self.f[(j + 1, j)]

    # coefficients ------------------------------------------------------------------
    def dc(self, i: int, r: int) -> Element:
        return self.d[i - 1].coeffs[r]

    def dpc(self, i: int, r: int) -> Element:
        return self.d_inv[i - 1].coeffs[r]

    def ec(self, i: int, j: int, r: int) -> Element:
        return self.e[(i, j)].coeffs[r]

    def fc(self, j: int, i: int, r: int) -> Element:
        return self.f[(j, i)].coeffs[r]

    # matrices ------------------------------------------------------------------------
    def _blank(self):
        Z = USeries.zero(self.N, self.ring)
        return [[Z] * self.size for _ in range(self.size)]

    def F_matrix(self) -> TMatrix:
        rows = self._blank()
        for a in range(self.size):
            rows[a][a] = USeries.one(self.N, self.ring)
        for (j, i), s in self.f.items():
            rows[j - 1][i - 1] = s
        return TMatrix(rows, self.params, self.ring)

    def D_matrix(self) -> TMatrix:
        rows = self._blank()
        for a in range(self.size):
            rows[a][a] = self.d[a]
        return TMatrix(rows, self.params, self.ring)

    def E_matrix(self) -> TMatrix:
        rows = self._blank()
        for a in range(self.size):
            rows[a][a] = USeries.one(self.N, self.ring)
        for (i, j), s in self.e.items():
            rows[i - 1][j - 1] = s
        return TMatrix(rows, self.params, self.ring)

    def recompose(self) -> TMatrix:
        return self.F_matrix() * self.D_matrix() * self.E_matrix()

    def to_json(self) -> Dict[str, Dict[str, List[str]]]:
        out: Dict[str, Dict[str, List[str]]] = {"d": {}, "e": {}, "f": {}}
        for i in range(1, self.size + 1):
            out["d"][str(i)] = self.d_series(i).to_json()
        for (i, j), s in sorted(self.e.items()):
            out["e"][f"{i},{j}"] = s.to_json()
        for (j, i), s in sorted(self.f.items()):
            out["f"][f"{j},{i}"] = s.to_json()
        return out


def recomposition_mismatches(g: GaussData, T: SeriesMatrix) -> List[Tuple[int, int]]:
    """Entries where F D E differs from T."""
    R = g.recompose()
    return [(i, j) for i in range(1, T.size + 1) for j in range(1, T.size + 1)
            if R.entry(i, j) != T.entry(i, j)]


def gauss_decompose(T: TMatrix, method: str = "inverse", check: bool = True) -> GaussData:
    """Gauss factors from quasideterminants of submatrices of T.

    d_i is the (i,i) quasideterminant of the leading i x i block (``method``
    picks full inversion or the Schur form); e_ij and f_ji come from the
    bordered blocks, which always use the Schur form because their constant
    term is singular.  F D E = T is asserted unless ``check`` is false.
    """
    D = T.size
    d: List[USeries] = []
    d_inv: List[USeries] = []
    e: Dict[Tuple[int, int], USeries] = {}
    f: Dict[Tuple[int, int], USeries] = {}
    for i in range(1, D + 1):
        lead = list(range(1, i + 1))
        di = quasideterminant(T.submatrix(lead, lead), i, i, method)
        di_inv = series_invert(di)
        d.append(di)
        d_inv.append(di_inv)
        head = list(range(1, i))
        for j in range(i + 1, D + 1):
            Xe = T.submatrix(lead, head + [j])
            e[(i, j)] = di_inv * quasideterminant(Xe, i, i, "schur")
            Xf = T.submatrix(head + [j], lead)
            f[(j, i)] = quasideterminant(Xf, i, i, "schur") * di_inv
    g = GaussData(T.params, T.ring, d, d_inv, e, f)
    if check:
        bad = recomposition_mismatches(g, T)
        if bad:
            raise RecompositionError(f"F*D*E differs from T at entries {bad}")
    return g


def _chain_sums(D: int, table, upper: bool, N: int, ring) -> Dict[Tuple[int, int], USeries]:
    # alternating sums over strictly increasing index chains
    out: Dict[Tuple[int, int], USeries] = {}
    for i in range(1, D + 1):
        for j in range(i + 1, D + 1):
            acc = USeries.zero(N, ring)
            # chains i = i0 < i1 < ... < is = j, built by extending from i
            stack = [(i, None, 0)]
            while stack:
                cur, prod, s = stack.pop()
                for nxt in range(cur + 1, j + 1):
                    step = table[(cur, nxt)] if upper else table[(nxt, cur)]
                    if prod is None:
                        p2 = step
                    elif upper:
                        p2 = prod * step
                    else:
                        p2 = step * prod
                    if nxt == j:
                        acc = acc + (p2 if (s + 1) % 2 == 0 else -p2)
                    else:
                        stack.append((nxt, p2, s + 1))
            out[(i, j) if upper else (j, i)] = acc
    return out


def primed_series(g: GaussData):
    """Entries e'_ij of E^{-1} and f'_ji of F^{-1} as alternating chain sums."""
    D, N, ring = g.size, g.N, g.ring
    return _chain_sums(D, g.e, True, N, ring), _chain_sums(D, g.f, False, N, ring)


# --- RTT in the graded tensor algebra Y (x) End (x) End ---------------------------

class _OpSeries:
    """Sum over keys (a,b,c,d) of coefficient-series times E_ab (x) E_cd."""

    def __init__(self, Y: SuperYangian, par, N: int):
        self.Y = Y
        self.par = par
        self.N = N
        self.terms: Dict[Tuple[int, int, int, int], Dict[Tuple[int, int], Element]] = {}

    def add(self, key, rs, c):
        if isinstance(c, Element):
            if c.is_zero():
                return
        elif not c:
            return
        else:
            c = self.Y.scalar(c)
        slot = self.terms.setdefault(key, {})
        if rs in slot:
            v = slot[rs] + c
            if v.is_zero():
                del slot[rs]
            else:
                slot[rs] = v
        else:
            slot[rs] = c

    def __mul__(self, other: "_OpSeries") -> "_OpSeries":
        p, N, Y = self.par, self.N, self.Y
        out = _OpSeries(Y, p, N)
        for (a, b, c, d), S in self.terms.items():
            px, py = (p[a] + p[b]) & 1, (p[c] + p[d]) & 1
            for (a2, b2, c2, d2), S2 in other.terms.items():
                if b != a2 or d != c2:
                    continue
                pxx = (p[a2] + p[b2]) & 1
                pB = (pxx + p[c2] + p[d2]) & 1
                sign = -1 if (pB * (px + py) + pxx * py) & 1 else 1
                key = (a, b2, c, d2)
                for (r1, s1), A in S.items():
                    for (r2, s2), B in S2.items():
                        r, s = r1 + r2, s1 + s2
                        if r > N or s > N:
                            continue
                        out.add(key, (r, s), Y.mul(A, B).scale(sign))
        return out

    def __sub__(self, other: "_OpSeries") -> "_OpSeries":
        out = _OpSeries(self.Y, self.par, self.N)
        for key, S in self.terms.items():
            for rs, c in S.items():
                out.add(key, rs, c)
        for key, S in other.terms.items():
            for rs, c in S.items():
                out.add(key, rs, -c)
        return out

    def times_u_minus_v(self) -> "_OpSeries":
        out = _OpSeries(self.Y, self.par, self.N)
        for key, S in self.terms.items():
            for (r, s), c in S.items():
                out.add(key, (r - 1, s), c)
                out.add(key, (r, s - 1), -c)
        return out


def _T_op(T: TMatrix, slot: int) -> _OpSeries:
    D, N, Y = T.size, T.N, T.ring
    par = [None] + [T.params.parity(i) for i in range(1, D + 1)]
    op = _OpSeries(Y, par, N)
    for i in range(1, D + 1):
        for j in range(1, D + 1):
            sg = T.sign(i, j)
            for r, c in enumerate(T.entry(i, j).coeffs):
                for k in range(1, D + 1):
                    key = (i, j, k, k) if slot == 1 else (k, k, i, j)
                    rs = (r, 0) if slot == 1 else (0, r)
                    op.add(key, rs, c.scale(sg) if isinstance(c, Element) else c * sg)
    return op


def _P_op(params: AlgebraParams, Y, N) -> _OpSeries:
    D = params.size
    par = [None] + [params.parity(i) for i in range(1, D + 1)]
    op = _OpSeries(Y, par, N)
    for i in range(1, D + 1):
        for j in range(1, D + 1):
            op.add((i, j, j, i), (0, 0), -1 if par[j] else 1)
    return op


def rtt_residual(params: AlgebraParams) -> RelationReport:
    """Check (u-v) R(u-v) T1(u) T2(v) = T2(v) T1(u) (u-v) R(u-v) coefficientwise.

    Coefficients of u^{-r} v^{-s} are exact for -1 <= r, s <= N-1 and every
    one of them, for every operator key, is one instance of the report.
    """
    T = build_T(params)
    Y, N, D = T.ring, params.N, params.size
    T1, T2 = _T_op(T, 1), _T_op(T, 2)
    P = _P_op(params, Y, N)
    T1T2, T2T1 = T1 * T2, T2 * T1
    res = (T1T2.times_u_minus_v() - P * T1T2) - (T2T1.times_u_minus_v() - T2T1 * P)
    rep = RelationReport("rtt", params.m, params.n, N)
    for a in range(1, D + 1):
        for b in range(1, D + 1):
            for c in range(1, D + 1):
                for d in range(1, D + 1):
                    S = res.terms.get((a, b, c, d), {})
                    for r in range(-1, N):
                        for s in range(-1, N):
                            rep.record("rtt", (a, b, c, d), (r, s), S.get((r, s), Y.zero))
    return rep


def eq5_check(params: AlgebraParams, T: Optional[TMatrix] = None,
              Tp: Optional[TMatrix] = None) -> RelationReport:
    """Cleared form of the bracket between t_ij(u) and t'_kl(v)."""
    from .series import BiSeries

    T = T or build_T(params)
    Tp = Tp or T.inverse()
    Y, N, D = T.ring, params.N, params.size
    p = params.parity
    rep = RelationReport("eq5", params.m, params.n, N)
    U = {(i, j): BiSeries.from_u(T.entry(i, j)) for i in range(1, D + 1) for j in range(1, D + 1)}
    V = {(i, j): BiSeries.from_v(Tp.entry(i, j)) for i in range(1, D + 1) for j in range(1, D + 1)}
    for i in range(1, D + 1):
        for j in range(1, D + 1):
            for k in range(1, D + 1):
                for l in range(1, D + 1):
                    lhs = U[(i, j)].supercommutator(V[(k, l)]).times_u_minus_v()
                    rhs = BiSeries({}, N, N, Y)
                    if k == j:
                        for s in range(1, D + 1):
                            rhs = rhs + U[(i, s)] * V[(s, l)]
                    if i == l:
                        for s in range(1, D + 1):
                            rhs = rhs - V[(k, s)] * U[(s, j)]
                    sign = -1 if (p(i) * p(j) + p(i) * p(k) + p(j) * p(k)) & 1 else 1
                    diff = lhs - rhs.scale(sign)
                    for r in range(-1, N):
                        for s in range(-1, N):
                            rep.record("eq5", (i, j, k, l), (r, s), diff[(r, s)])
    return rep
