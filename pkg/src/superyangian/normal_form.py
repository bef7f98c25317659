"""The super Yangian Y(gl_{m|n}) as a rewriting system.

Generators ``t[i,j,r]`` (``r >= 1``) are packed into integers whose natural
order is the PBW order used throughout the package: first the class of the
pair (``i > j`` before ``i == j`` before ``i < j``, i.e. f-type before d-type
before e-type), then ``(i, j, r)`` lexicographically.
"""

from __future__ import annotations

import itertools
import math
import re
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

import sympy

from .core import AlgebraParams, Element, Word, as_scalar, parity_of_index
from .rewriting import RewritingSystem, _acc

__all__ = [
    "GeneratorOrder",
    "ParseError",
    "SuperYangian",
    "VandermondeInstance",
    "defining_commutator",
    "pbw_basis",
    "reduce",
    "vandermonde_det",
    "vandermonde_matrix",
    "yangian",
]

_IDX = 16
_LEVELS = 1024


class ParseError(ValueError):
    def __init__(self, msg: str, pos: int, text: str):
        super().__init__(f"{msg} at position {pos}: {text[:pos]}<<HERE>>{text[pos:]}")
        self.pos = pos
        self.text = text


class GeneratorOrder:
    """Class-then-lexicographic order on generators ``(i, j, r)``."""

    name = "class-lex"

    @staticmethod
    def key(i: int, j: int, r: int) -> Tuple[int, int, int, int]:
        cls = 0 if i > j else (1 if i == j else 2)
        return (cls, i, j, r)

    def sort(self, gens):
        return sorted(gens, key=lambda g: self.key(*g))


class SuperYangian(RewritingSystem):
    """Generators, defining relations and normal forms of Y(gl_{m|n})."""

    def __init__(self, m: int, n: int):
        super().__init__()
        self.params = AlgebraParams(m, n, 1)
        self.m, self.n = m, n
        self.size = m + n
        if self.size >= _IDX:
            raise ValueError("m + n too large for generator packing")
        self._par = [None] + [parity_of_index(i, self.params) for i in range(1, self.size + 1)]
        self._decode: Dict[int, Tuple[int, int, int]] = {}
        self._gpar: Dict[int, int] = {}

    def __repr__(self):
        return f"Y(gl_{self.m}|{self.n})"

    def __reduce__(self):
        return (yangian, (self.m, self.n))

    # indices & codes --------------------------------------------------------
    def index_parity(self, i: int) -> int:
        if not 1 <= i <= self.size:
            raise IndexError(f"index {i} outside 1..{self.size}")
        return self._par[i]

    def code(self, i: int, j: int, r: int) -> int:
        if not (1 <= i <= self.size and 1 <= j <= self.size):
            raise IndexError(f"generator t[{i},{j},{r}] out of range for {self!r}")
        if not 1 <= r < _LEVELS:
            raise IndexError(f"level {r} out of range")
        cls = 0 if i > j else (1 if i == j else 2)
        c = ((cls * _IDX + i) * _IDX + j) * _LEVELS + r
        if c not in self._decode:
            self._decode[c] = (i, j, r)
            self._gpar[c] = (self._par[i] + self._par[j]) & 1
        return c

    def decode(self, code: int) -> Tuple[int, int, int]:
        return self._decode[code]

    def parity(self, code: int) -> int:
        return self._gpar[code]

    def render_generator(self, code: int) -> str:
        i, j, r = self._decode[code]
        return f"t[{i},{j},{r}]"

    def t(self, i: int, j: int, r: int) -> Element:
        """The generator t_{ij}^{(r)}; level 0 is the scalar delta_{ij}."""
        if r == 0:
            self.index_parity(i)
            self.index_parity(j)
            return self.one if i == j else self.zero
        return self.gen(self.code(i, j, r))

    # filtrations ---------------------------------------------------------------
    def deg1(self, w: Word) -> int:
        return sum(self._decode[g][2] for g in w)

    def deg2(self, w: Word) -> int:
        return sum(self._decode[g][2] - 1 for g in w)

    # defining relations -------------------------------------------------------
    def _sign(self, i, j, k) -> int:
        p = self._par
        return -1 if (p[i] * p[j] + p[i] * p[k] + p[j] * p[k]) & 1 else 1

    def defining_terms(self, i, j, r, k, l, s) -> Dict[Word, int]:
        """Right-hand side of [t_ij^(r), t_kl^(s)] as a map word -> coefficient."""
        sign = self._sign(i, j, k)
        out: Dict[Word, int] = {}
        top = r + s - 1
        for p in range(min(r, s)):
            q = top - p
            # t_kj^(p) t_il^(q)
            for (a, b, x), (c, d, y), cf in (
                ((k, j, p), (i, l, q), sign),
                ((k, j, q), (i, l, p), -sign),
            ):
                w: Tuple[int, ...] = ()
                if x == 0:
                    if a != b:
                        continue
                else:
                    w += (self.code(a, b, x),)
                if y == 0:
                    if c != d:
                        continue
                else:
                    w += (self.code(c, d, y),)
                _acc(out, w, cf)
        return out

    def _bracket(self, a: int, b: int):
        i, j, r = self._decode[a]
        k, l, s = self._decode[b]
        return self.defining_terms(i, j, r, k, l, s)

    def defining_commutator(self, i, j, r, k, l, s) -> Element:
        for x in (i, j, k, l):
            self.index_parity(x)
        if r < 1 or s < 1:
            raise IndexError("levels must be positive")
        return Element(self, self.defining_terms(i, j, r, k, l, s))

    # text interchange ----------------------------------------------------------
    def parse(self, text: str) -> Element:
        return _Parser(self, text).parse()

    def render(self, e: Element) -> str:
        return e.render()

    # basis ---------------------------------------------------------------------
    def generators(self, max_level: int) -> List[int]:
        D = self.size
        codes = [self.code(i, j, r) for i in range(1, D + 1) for j in range(1, D + 1)
                 for r in range(1, max_level + 1)]
        return sorted(codes)

    def pbw_basis(self, max_deg1: int) -> List[Word]:
        if max_deg1 < 0:
            raise ValueError("max_deg1 must be non-negative")
        gens = self.generators(max_deg1)
        out: List[Word] = []

        def extend(prefix: Word, start: int, budget: int):
            out.append(prefix)
            for idx in range(start, len(gens)):
                g = gens[idx]
                lvl = self._decode[g][2]
                if lvl > budget:
                    continue
                nxt = idx + 1 if self._gpar[g] else idx
                extend(prefix + (g,), nxt, budget - lvl)

        extend((), 0, max_deg1)
        out.sort(key=lambda w: (len(w), w))
        return out


@lru_cache(maxsize=None)
def yangian(m: int, n: int) -> SuperYangian:
    """Shared algebra object for gl_{m|n} (elements compare by identity of it)."""
    return SuperYangian(m, n)


def _alg(params) -> SuperYangian:
    if isinstance(params, SuperYangian):
        return params
    return yangian(params.m, params.n)


def defining_commutator(params, i, j, r, k, l, s) -> Element:
    return _alg(params).defining_commutator(i, j, r, k, l, s)


def reduce(e: Element, strategy: str = "fold") -> Element:
    return e.system.reduce(e, strategy)


def pbw_basis(params, max_deg1: int) -> List[Word]:
    return _alg(params).pbw_basis(max_deg1)


# --- text parsing -------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(t\[\s*\d+\s*,\s*\d+\s*,\s*\d+\s*\])|(\d+)|(.))")


class _Parser:
    def __init__(self, alg: SuperYangian, text: str):
        self.alg = alg
        self.text = text
        self.tokens = []
        pos = 0
        while pos < len(text):
            mt = _TOKEN.match(text, pos)
            if mt is None or mt.end() == pos:
                break
            start = mt.start(mt.lastindex)
            self.tokens.append((mt.lastindex, mt.group(mt.lastindex), start))
            pos = mt.end()
            if text[pos:].strip() == "":
                break
        self.i = 0

    def _peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None, len(self.text))

    def _take(self):
        tok = self._peek()
        self.i += 1
        return tok

    def fail(self, msg):
        raise ParseError(msg, self._peek()[2], self.text)

    def parse(self) -> Element:
        if not self.tokens:
            self.fail("empty expression")
        e = self.expr()
        if self.i != len(self.tokens):
            self.fail("unexpected token")
        return e

    def expr(self) -> Element:
        sign = 1
        kind, val, _ = self._peek()
        if kind == 3 and val in "+-":
            self._take()
            sign = -1 if val == "-" else 1
        out = self.term().scale(sign)
        while True:
            kind, val, _ = self._peek()
            if kind == 3 and val in "+-":
                self._take()
                t = self.term()
                out = out + t if val == "+" else out - t
            else:
                return out

    def term(self) -> Element:
        out = self.factor()
        while True:
            kind, val, _ = self._peek()
            if kind == 3 and val == "*":
                self._take()
                out = out * self.factor()
            elif kind == 3 and val == "/":
                self._take()
                k2, v2, _ = self._peek()
                if k2 != 2:
                    self.fail("expected integer denominator")
                self._take()
                if int(v2) == 0:
                    self.fail("division by zero")
                out = out.scale(as_scalar(f"1/{v2}"))
            else:
                return out

    def factor(self) -> Element:
        kind, val, pos = self._peek()
        if kind == 1:
            self._take()
            i, j, r = (int(x) for x in re.findall(r"\d+", val))
            try:
                return self.alg.t(i, j, r)
            except IndexError as exc:
                raise ParseError(str(exc), pos, self.text) from None
        if kind == 2:
            self._take()
            return self.alg.scalar(int(val))
        if kind == 3 and val == "(":
            self._take()
            e = self.expr()
            k2, v2, _ = self._peek()
            if not (k2 == 3 and v2 == ")"):
                self.fail("expected ')'")
            self._take()
            return e
        if kind == 3 and val == "-":
            self._take()
            return -self.factor()
        self.fail("expected generator, number or '('")


# --- Vandermonde-type determinant from the PBW independence argument ----------------

class VandermondeInstance:
    def __init__(self, c: Sequence):
        c = [as_scalar(x) for x in c]
        if len(set(c)) != len(c):
            raise ValueError("specialization constants must be pairwise distinct")
        self.c = c
        self.l = len(c)


def vandermonde_matrix(inst: VandermondeInstance) -> sympy.Matrix:
    """Row k, column s: k-th elementary symmetric sum of the c's other than c_s."""
    l = inst.l
    rows = []
    for k in range(l):
        row = []
        for s in range(l):
            others = inst.c[:s] + inst.c[s + 1:]
            e_k = sum((math.prod(sub) for sub in itertools.combinations(others, k)), Fraction(0))
            row.append(sympy.Rational(e_k.numerator, e_k.denominator))
        rows.append(row)
    return sympy.Matrix(rows)


def vandermonde_det(inst):
    if not isinstance(inst, VandermondeInstance):
        inst = VandermondeInstance(inst)
    d = sympy.Rational(vandermonde_matrix(inst).det())
    return as_scalar(Fraction(int(d.p), int(d.q)))
