"""PBW rewriting for superalgebras given by ordered generators and brackets.

A concrete system supplies three things: the integer order on generator
codes, the parity of each code, and the super-commutator ``[a, b]`` of two
generators written as a combination of words of strictly smaller filtration
degree (or of the same degree with fewer inversions).  The engine then
rewrites any word into ordered monomials in which no odd generator repeats,
using

    a b = (-1)^{|a||b|} b a + [a, b]    for a > b,
    a a = 1/2 [a, a]                    for odd a.

The default strategy folds generators into an already normal monomial one at
a time and memoizes ``normal_monomial * generator``; two independent worklist
strategies (leftmost / rightmost out-of-order pair) exist for fuzzing
confluence.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict

from .core import Element, Word, as_scalar

HALF = Fraction(1, 2)

Terms = Dict[Word, object]


def _acc(out: Terms, w: Word, c) -> None:
    v = out.get(w, 0) + c
    if v:
        out[w] = v
    else:
        out.pop(w, None)


class RewritingSystem:
    """Base class; subclasses implement ``parity``, ``_bracket`` and rendering."""

    def __init__(self):
        self._rmul_cache: Dict[tuple, Terms] = {}
        self._bracket_cache: Dict[tuple, Terms] = {}

    # to be provided ---------------------------------------------------------
    def parity(self, code: int) -> int:  # pragma: no cover - abstract
        raise NotImplementedError

    def _bracket(self, a: int, b: int) -> Terms:  # pragma: no cover - abstract
        raise NotImplementedError

    def render_generator(self, code: int) -> str:  # pragma: no cover - abstract
        raise NotImplementedError

    # ring protocol ----------------------------------------------------------
    def element(self, terms=None) -> Element:
        return Element(self, terms)

    def scalar(self, c) -> Element:
        c = as_scalar(c)
        return Element._raw(self, {(): c} if c else {})

    @property
    def zero(self) -> Element:
        return Element._raw(self, {})

    @property
    def one(self) -> Element:
        return Element._raw(self, {(): 1})

    def gen(self, code: int) -> Element:
        return Element._raw(self, {(code,): 1})

    def is_zero(self, e: Element) -> bool:
        return not e.terms

    # brackets ---------------------------------------------------------------
    def bracket_terms(self, a: int, b: int) -> Terms:
        key = (a, b)
        hit = self._bracket_cache.get(key)
        if hit is None:
            hit = {w: c for w, c in self._bracket(a, b).items() if c}
            self._bracket_cache[key] = hit
        return hit

    def is_normal_word(self, w: Word) -> bool:
        par = self.parity
        for x, y in zip(w, w[1:]):
            if x > y or (x == y and par(x)):
                return False
        return True

    def is_normal(self, e: Element) -> bool:
        return all(self.is_normal_word(w) for w in e.terms)

    # memoized fold ------------------------------------------------------------
    def _rmul(self, mono: Word, g: int) -> Terms:
        key = (mono, g)
        hit = self._rmul_cache.get(key)
        if hit is not None:
            return hit
        if not mono:
            res = {(g,): 1}
        else:
            a = mono[-1]
            if a < g or (a == g and not self.parity(g)):
                res = {mono + (g,): 1}
            else:
                head = mono[:-1]
                res: Terms = {}
                if a == g:
                    for w, c in self.bracket_terms(a, a).items():
                        for w2, c2 in self._mul_word(head, w).items():
                            _acc(res, w2, HALF * c * c2)
                else:
                    sign = -1 if (self.parity(a) and self.parity(g)) else 1
                    for w, c in self._rmul(head, g).items():
                        for w2, c2 in self._rmul(w, a).items():
                            _acc(res, w2, sign * c * c2)
                    for w, c in self.bracket_terms(a, g).items():
                        for w2, c2 in self._mul_word(head, w).items():
                            _acc(res, w2, c * c2)
                for w, c in list(res.items()):
                    if isinstance(c, Fraction) and c.denominator == 1:
                        res[w] = c.numerator
        self._rmul_cache[key] = res
        return res

    def _mul_word(self, mono: Word, word: Word) -> Terms:
        cur: Terms = {mono: 1}
        for g in word:
            nxt: Terms = {}
            for w, c in cur.items():
                for w2, c2 in self._rmul(w, g).items():
                    _acc(nxt, w2, c * c2)
            cur = nxt
            if not cur:
                break
        return cur

    def _mul_terms(self, left: Terms, right: Terms) -> Terms:
        out: Terms = {}
        for w1, c1 in left.items():
            for w2, c2 in right.items():
                for w, c in self._mul_word(w1, w2).items():
                    _acc(out, w, c1 * c2 * c)
        return out

    # public normal-form API ---------------------------------------------------
    def reduce(self, e: Element, strategy: str = "fold") -> Element:
        """Normal form of ``e``: ordered monomials with no repeated odd factor."""
        self._check(e)
        if strategy == "fold":
            out: Terms = {}
            for w, c in e.terms.items():
                for w2, c2 in self._mul_word((), w).items():
                    _acc(out, w2, c * c2)
            return Element._raw(self, out)
        if strategy in ("leftmost", "rightmost"):
            return Element._raw(self, self._worklist(e.terms, strategy == "leftmost"))
        raise ValueError(f"unknown strategy {strategy!r}")

    def _worklist(self, terms: Terms, leftmost: bool) -> Terms:
        par = self.parity
        done: Terms = {}
        todo: Terms = dict(terms)
        while todo:
            w, c = todo.popitem()
            positions = range(len(w) - 1)
            if not leftmost:
                positions = reversed(positions)
            hit = None
            for i in positions:
                x, y = w[i], w[i + 1]
                if x > y or (x == y and par(x)):
                    hit = i
                    break
            if hit is None:
                _acc(done, w, c)
                continue
            i = hit
            x, y = w[i], w[i + 1]
            left, right = w[:i], w[i + 2:]
            if x == y:
                for bw, bc in self.bracket_terms(x, x).items():
                    _acc(todo, left + bw + right, HALF * c * bc)
            else:
                sign = -1 if (par(x) and par(y)) else 1
                _acc(todo, left + (y, x) + right, sign * c)
                for bw, bc in self.bracket_terms(x, y).items():
                    _acc(todo, left + bw + right, c * bc)
        return done

    def mul(self, a: Element, b: Element) -> Element:
        """Normal form of ``a*b``; ``a`` must already be in normal form."""
        self._check(a)
        self._check(b)
        return Element._raw(self, self._mul_terms(a.terms, b.terms))

    def product(self, *factors: Element) -> Element:
        out = self.one
        for f in factors:
            out = self.mul(out, f)
        return out

    def power(self, a: Element, k: int) -> Element:
        out = self.one
        for _ in range(k):
            out = self.mul(out, a)
        return out

    def supercommutator(self, a: Element, b: Element) -> Element:
        """Normal form of ``[a, b]``, extended bilinearly over parity parts."""
        out = self.zero
        for pa, ea in a.homogeneous_parts().items():
            for pb, eb in b.homogeneous_parts().items():
                ab = self.mul(ea, eb)
                ba = self.mul(eb, ea)
                out = out + (ab + ba if pa and pb else ab - ba)
        return out

    def free_supercommutator(self, a: Element, b: Element) -> Element:
        """``[a, b]`` in the free algebra (words concatenated, not reduced)."""
        out = self.zero
        for pa, ea in a.homogeneous_parts().items():
            for pb, eb in b.homogeneous_parts().items():
                out = out + (ea * eb + eb * ea if pa and pb else ea * eb - eb * ea)
        return out

    def _check(self, e: Element):
        if e.system is not self:
            from .core import ParamsMismatch

            raise ParamsMismatch(f"element of {e.system!r} given to {self!r}")

    def cache_info(self) -> dict:
        return {"rmul": len(self._rmul_cache), "bracket": len(self._bracket_cache)}

    def clear_cache(self):
        self._rmul_cache.clear()
