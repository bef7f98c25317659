"""Truncated power series in u^{-1} (and u^{-1}, v^{-1}).

Coefficients live in a *ring*: either :data:`QQ` (exact rationals) or a
:class:`~superyangian.rewriting.RewritingSystem`, whose ``mul`` returns normal
forms.  Every operation is exact up to the truncation order ``N``.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Dict, List, Sequence, Tuple

from .core import Element, as_scalar, render_scalar

__all__ = [
    "QQ",
    "BiSeries",
    "InvertibilityError",
    "USeries",
    "factorial_root",
    "series_invert",
    "series_shift",
]


class InvertibilityError(ArithmeticError):
    """Constant term is not the unit."""


class _Rationals:
    zero = 0
    one = 1

    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def scalar(c):
        return as_scalar(c)

    @staticmethod
    def is_zero(a):
        return a == 0

    @staticmethod
    def supercommutator(a, b):
        return 0

    def __repr__(self):
        return "QQ"


QQ = _Rationals()


def _ring_of(x):
    return x.system if isinstance(x, Element) else QQ


class USeries:
    """``c_0 + c_1 u^{-1} + ... + c_N u^{-N}`` with coefficients in ``ring``."""

    __slots__ = ("coeffs", "N", "ring")

    def __init__(self, coeffs: Sequence, N: int, ring=QQ):
        if N < 0:
            raise ValueError("truncation order must be non-negative")
        cs = list(coeffs)[: N + 1]
        if ring is QQ:
            cs = [as_scalar(c) for c in cs]
        cs += [ring.zero] * (N + 1 - len(cs))
        self.coeffs: List = cs
        self.N = N
        self.ring = ring

    # constructors -------------------------------------------------------------
    @classmethod
    def constant(cls, c, N: int, ring=QQ) -> "USeries":
        c = ring.scalar(c) if ring is not QQ else as_scalar(c)
        return cls([c], N, ring)

    @classmethod
    def one(cls, N: int, ring=QQ) -> "USeries":
        return cls([ring.one], N, ring)

    @classmethod
    def zero(cls, N: int, ring=QQ) -> "USeries":
        return cls([], N, ring)

    def __getitem__(self, r: int):
        if r < 0 or r > self.N:
            raise IndexError(f"coefficient u^-{r} beyond truncation order {self.N}")
        return self.coeffs[r]

    def _compat(self, other: "USeries") -> int:
        if other.ring is not self.ring:
            raise ValueError(f"series over {self.ring!r} and {other.ring!r}")
        return min(self.N, other.N)

    def _lift(self, other):
        if isinstance(other, USeries):
            return other
        c = other if isinstance(other, Element) else (
            self.ring.scalar(other) if self.ring is not QQ else as_scalar(other))
        return USeries([c], self.N, self.ring)

    # arithmetic ---------------------------------------------------------------
    def __add__(self, other):
        other = self._lift(other)
        N = self._compat(other)
        return USeries([self.coeffs[r] + other.coeffs[r] for r in range(N + 1)], N, self.ring)

    __radd__ = __add__

    def __neg__(self):
        return USeries([-c for c in self.coeffs], self.N, self.ring)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, (USeries, Element)):
            c = as_scalar(other)
            return USeries([x * c for x in self.coeffs], self.N, self.ring)
        other = self._lift(other)
        N = self._compat(other)
        mul = self.ring.mul
        a, b = self.coeffs, other.coeffs
        out = []
        for r in range(N + 1):
            acc = self.ring.zero
            for p in range(r + 1):
                x, y = a[p], b[r - p]
                if self.ring.is_zero(x) or self.ring.is_zero(y):
                    continue
                acc = acc + mul(x, y)
            out.append(acc)
        return USeries(out, N, self.ring)

    def __rmul__(self, other):
        if isinstance(other, Element):
            return self._lift(other) * self
        return self * other

    def __eq__(self, other):
        if not isinstance(other, USeries):
            return NotImplemented
        N = self._compat(other)
        return self.coeffs[: N + 1] == other.coeffs[: N + 1]

    __hash__ = None

    def truncate(self, N: int) -> "USeries":
        if N > self.N:
            raise ValueError("cannot raise the truncation order")
        return USeries(self.coeffs[: N + 1], N, self.ring)

    def map(self, fn, ring=None) -> "USeries":
        return USeries([fn(c) for c in self.coeffs], self.N, ring or self.ring)

    def is_zero(self) -> bool:
        return all(self.ring.is_zero(c) for c in self.coeffs)

    def invert(self) -> "USeries":
        return series_invert(self)

    def shift(self, c) -> "USeries":
        return series_shift(self, c)

    # rendering ----------------------------------------------------------------
    def to_json(self) -> List[str]:
        return [c.render() if isinstance(c, Element) else render_scalar(c) for c in self.coeffs]

    def __repr__(self):
        body = ", ".join(self.to_json())
        return f"USeries([{body}], N={self.N})"


def series_invert(s: USeries) -> USeries:
    """Two-sided inverse to order N; the constant term must be the unit."""
    ring = s.ring
    if s.coeffs[0] != ring.one:
        raise InvertibilityError("constant term of the series is not 1")
    inv = [ring.one]
    for r in range(1, s.N + 1):
        acc = ring.zero
        for p in range(1, r + 1):
            if ring.is_zero(s.coeffs[p]) or ring.is_zero(inv[r - p]):
                continue
            acc = acc + ring.mul(s.coeffs[p], inv[r - p])
        inv.append(-acc)
    return USeries(inv, s.N, ring)


def series_shift(s: USeries, c) -> USeries:
    """``s(u + c)`` re-expanded in powers of u^{-1}."""
    c = as_scalar(c)
    out = [s.coeffs[0]] + [s.ring.zero] * s.N
    if not c:
        return USeries(list(s.coeffs), s.N, s.ring)
    for r in range(1, s.N + 1):
        x = s.coeffs[r]
        if s.ring.is_zero(x):
            continue
        for k in range(0, s.N - r + 1):
            f = (-1) ** k * comb(r + k - 1, k) * c ** k
            if f:
                out[r + k] = out[r + k] + x * f
    return USeries(out, s.N, s.ring)


def _check_commuting(coeffs, ring):
    if ring is QQ:
        return
    for i in range(len(coeffs)):
        for j in range(i + 1, len(coeffs)):
            if not ring.supercommutator(coeffs[i], coeffs[j]).is_zero():
                raise ValueError(f"coefficients {i} and {j} do not commute")


def factorial_root(a: USeries, K: int, check: bool = True) -> USeries:
    """The unique ``b`` with ``a(u) = b(u) b(u-1) ... b(u-K+1)`` to order N.

    The coefficients of ``a`` must pairwise commute; this is verified when
    ``check`` is true.
    """
    if not isinstance(K, int) or K <= 0:
        raise ValueError("K must be a positive integer")
    ring = a.ring
    if a.coeffs[0] != ring.one:
        raise InvertibilityError("constant term of the series is not 1")
    if check:
        _check_commuting(a.coeffs[1:], ring)
    root = [ring.one] + [ring.zero] * a.N
    inv_K = Fraction(1, K)
    for r in range(1, a.N + 1):
        trial = USeries(root[: r + 1], r, ring)
        prod = USeries.one(r, ring)
        for k in range(K):
            prod = prod * series_shift(trial, -k)
        root[r] = (a.coeffs[r] - prod.coeffs[r]) * inv_K
        if isinstance(root[r], Element):
            root[r] = root[r].scale(1)
    return USeries(root, a.N, ring)


class BiSeries:
    """Coefficients of ``u^{-r} v^{-s}`` for ``-1 <= r <= Nu``, ``-1 <= s <= Nv``.

    Negative exponents appear only after clearing a denominator with
    :meth:`times_u_minus_v`, which lowers both exact bounds by one.
    """

    __slots__ = ("coeffs", "Nu", "Nv", "ring")

    def __init__(self, coeffs: Dict[Tuple[int, int], object], Nu: int, Nv: int, ring=QQ):
        self.ring = ring
        self.Nu, self.Nv = Nu, Nv
        self.coeffs = {k: v for k, v in coeffs.items()
                       if k[0] <= Nu and k[1] <= Nv and not ring.is_zero(v)}

    @classmethod
    def from_u(cls, s: USeries, Nv: int | None = None) -> "BiSeries":
        Nv = s.N if Nv is None else Nv
        return cls({(r, 0): c for r, c in enumerate(s.coeffs)}, s.N, Nv, s.ring)

    @classmethod
    def from_v(cls, s: USeries, Nu: int | None = None) -> "BiSeries":
        Nu = s.N if Nu is None else Nu
        return cls({(0, r): c for r, c in enumerate(s.coeffs)}, Nu, s.N, s.ring)

    def __getitem__(self, key):
        return self.coeffs.get(key, self.ring.zero)

    def _bounds(self, other):
        if other.ring is not self.ring:
            raise ValueError("mismatched coefficient rings")
        return min(self.Nu, other.Nu), min(self.Nv, other.Nv)

    def __add__(self, other):
        Nu, Nv = self._bounds(other)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out[k] + v if k in out else v
        return BiSeries(out, Nu, Nv, self.ring)

    def __neg__(self):
        return BiSeries({k: -v for k, v in self.coeffs.items()}, self.Nu, self.Nv, self.ring)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = as_scalar(c)
        return BiSeries({k: v * c for k, v in self.coeffs.items()}, self.Nu, self.Nv, self.ring)

    def _combine(self, other, op):
        Nu, Nv = self._bounds(other)
        out: Dict[Tuple[int, int], object] = {}
        for (r1, s1), a in self.coeffs.items():
            for (r2, s2), b in other.coeffs.items():
                k = (r1 + r2, s1 + s2)
                if k[0] > Nu or k[1] > Nv:
                    continue
                x = op(a, b)
                out[k] = out[k] + x if k in out else x
        return BiSeries(out, Nu, Nv, self.ring)

    def __mul__(self, other):
        if not isinstance(other, BiSeries):
            return self.scale(other)
        return self._combine(other, self.ring.mul)

    def supercommutator(self, other) -> "BiSeries":
        return self._combine(other, self.ring.supercommutator)

    def times_u_minus_v(self) -> "BiSeries":
        out: Dict[Tuple[int, int], object] = {}
        for (r, s), c in self.coeffs.items():
            for k, x in (((r - 1, s), c), ((r, s - 1), -c)):
                out[k] = out[k] + x if k in out else x
        return BiSeries(out, self.Nu - 1, self.Nv - 1, self.ring)

    def exact_keys(self):
        return [(r, s) for r in range(-1, self.Nu + 1) for s in range(-1, self.Nv + 1)]

    def is_zero(self) -> bool:
        return all(self.ring.is_zero(v) for v in self.coeffs.values())

    def __repr__(self):
        return f"BiSeries({len(self.coeffs)} terms, Nu={self.Nu}, Nv={self.Nv})"
