"""U(gl_{m|n}) and graded tensor powers of rewriting systems.

A tensor power is itself a rewriting system: generator codes carry the slot
in their most significant part, so normal words list slot 1 first, then slot
2, and so on, which is exactly ``a_1 (x) a_2 (x) ... (x) a_l``.  Generators in
different slots super-commute, which yields the Koszul sign rule
``(a (x) b)(a' (x) b') = (-1)^{|b||a'|} a a' (x) b b'``.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Dict, List, Tuple

from .core import AlgebraParams, Element, Word, parity_of_index
from .rewriting import RewritingSystem

__all__ = [
    "GlSuperalgebra",
    "TensorPower",
    "gl_superalgebra",
    "split_tensor",
    "tensor",
    "tensor_power",
]

_SLOT = 1 << 22
_IDX = 16


class GlSuperalgebra(RewritingSystem):
    """U(gl_{m|n}) with PBW order: class (i>j, i=j, i<j) then (i, j)."""

    def __init__(self, m: int, n: int):
        super().__init__()
        self.params = AlgebraParams(m, n, 1)
        self.m, self.n = m, n
        self.size = m + n
        self._par = [None] + [parity_of_index(i, self.params) for i in range(1, self.size + 1)]

    def __repr__(self):
        return f"U(gl_{self.m}|{self.n})"

    def __reduce__(self):
        return (gl_superalgebra, (self.m, self.n))

    def code(self, i: int, j: int) -> int:
        if not (1 <= i <= self.size and 1 <= j <= self.size):
            raise IndexError(f"E[{i},{j}] out of range for {self!r}")
        cls = 0 if i > j else (1 if i == j else 2)
        return (cls * _IDX + i) * _IDX + j

    def decode(self, code: int) -> Tuple[int, int]:
        return (code // _IDX) % _IDX, code % _IDX

    def parity(self, code: int) -> int:
        i, j = self.decode(code)
        return (self._par[i] + self._par[j]) & 1

    def render_generator(self, code: int) -> str:
        return "E[{},{}]".format(*self.decode(code))

    def E(self, i: int, j: int) -> Element:
        return self.gen(self.code(i, j))

    def _bracket(self, a: int, b: int) -> Dict[Word, int]:
        i, j = self.decode(a)
        k, l = self.decode(b)
        p = self._par
        out: Dict[Word, int] = {}
        if k == j:
            w = (self.code(i, l),)
            out[w] = out.get(w, 0) + 1
        if i == l:
            sign = -1 if ((p[i] + p[j]) * (p[k] + p[l])) & 1 else 1
            w = (self.code(k, j),)
            out[w] = out.get(w, 0) - sign
        return {w: c for w, c in out.items() if c}


@lru_cache(maxsize=None)
def gl_superalgebra(m: int, n: int) -> GlSuperalgebra:
    return GlSuperalgebra(m, n)


class TensorPower(RewritingSystem):
    """``base`` tensored with itself ``l`` times (slots numbered 1..l)."""

    def __init__(self, base: RewritingSystem, l: int):
        super().__init__()
        if l < 1:
            raise ValueError("number of tensor slots must be positive")
        self.base = base
        self.l = l

    def __repr__(self):
        return f"{self.base!r}^(x){self.l}"

    def __reduce__(self):
        return (tensor_power, (self.base, self.l))

    def lift(self, code: int, slot: int) -> int:
        if not 1 <= slot <= self.l:
            raise IndexError(f"slot {slot} outside 1..{self.l}")
        return (slot - 1) * _SLOT + code

    @staticmethod
    def split_code(code: int) -> Tuple[int, int]:
        return code // _SLOT + 1, code % _SLOT

    def parity(self, code: int) -> int:
        return self.base.parity(code % _SLOT)

    def render_generator(self, code: int) -> str:
        slot, c = self.split_code(code)
        return f"{self.base.render_generator(c)}^[{slot}]"

    def _bracket(self, a: int, b: int):
        sa, ca = self.split_code(a)
        sb, cb = self.split_code(b)
        if sa != sb:
            return {}
        off = (sa - 1) * _SLOT
        return {tuple(off + g for g in w): c for w, c in self.base.bracket_terms(ca, cb).items()}

    def embed(self, e: Element, slot: int) -> Element:
        """``1 (x) ... (x) e (x) ... (x) 1`` with ``e`` in position ``slot``."""
        if e.system is not self.base:
            from .core import ParamsMismatch

            raise ParamsMismatch(f"element of {e.system!r} given to {self!r}")
        off = self.lift(0, slot)
        return Element._raw(self, {tuple(off + g for g in w): c for w, c in e.terms.items()})

    def split(self, e: Element) -> Dict[Tuple[Word, ...], object]:
        """Normal element as a map from per-slot word tuples to coefficients."""
        out: Dict[Tuple[Word, ...], object] = {}
        for w, c in e.terms.items():
            parts: List[List[int]] = [[] for _ in range(self.l)]
            for g in w:
                s, base_code = self.split_code(g)
                parts[s - 1].append(base_code)
            out[tuple(tuple(p) for p in parts)] = c
        return out


@lru_cache(maxsize=None)
def tensor_power(base: RewritingSystem, l: int) -> TensorPower:
    return TensorPower(base, l)


def tensor(*factors: Element) -> Element:
    """``f_1 (x) f_2 (x) ...`` in the tensor power of their common algebra."""
    base = factors[0].system
    P = tensor_power(base, len(factors))
    out = P.one
    for s, f in enumerate(factors, 1):
        out = P.mul(out, P.embed(f, s))
    return out


def split_tensor(e: Element):
    return e.system.split(e)
