"""Exact scalars, index parities and linear combinations of words.

An :class:`Element` is a finite map from words (tuples of integer generator
codes) to nonzero rational coefficients.  The codes are owned by a
:class:`~superyangian.rewriting.RewritingSystem`, whose integer ordering of
codes is the PBW order used for normal forms.  Multiplication with ``*`` is
the free (concatenation) product; normal-form aware products go through the
owning system (``system.mul``).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import TYPE_CHECKING, Dict, Iterable, Iterator, Tuple

if TYPE_CHECKING:  # pragma: no cover
    from .rewriting import RewritingSystem

Word = Tuple[int, ...]

__all__ = [
    "AlgebraParams",
    "Element",
    "ParamsMismatch",
    "Word",
    "as_scalar",
    "parity_of_index",
    "render_scalar",
]


class ParamsMismatch(ValueError):
    """Raised when elements of two different algebras are combined."""


def as_scalar(x) -> Rational:
    """Coerce ``x`` to an exact rational (int when integral)."""
    if isinstance(x, bool):
        return int(x)
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, Rational):
        return as_scalar(Fraction(x.numerator, x.denominator))
    if isinstance(x, str):
        return as_scalar(Fraction(x))
    raise TypeError(f"not an exact rational scalar: {x!r}")


def render_scalar(c) -> str:
    c = Fraction(c)
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


@dataclass(frozen=True)
class AlgebraParams:
    """Shape of ``gl_{m|n}`` together with the truncation order ``N``."""

    m: int
    n: int
    N: int = 3

    def __post_init__(self):
        for name in ("m", "n", "N"):
            v = getattr(self, name)
            if not isinstance(v, int) or isinstance(v, bool):
                raise TypeError(f"{name} must be an int, got {v!r}")
        if self.m < 0 or self.n < 0:
            raise ValueError("m and n must be non-negative")
        if self.m + self.n < 1:
            raise ValueError("m + n must be at least 1")
        if self.N < 1:
            raise ValueError("truncation order N must be positive")

    @property
    def size(self) -> int:
        return self.m + self.n

    def parity(self, i: int) -> int:
        return parity_of_index(i, self)

    def swapped(self) -> "AlgebraParams":
        return AlgebraParams(self.n, self.m, self.N)

    def with_order(self, N: int) -> "AlgebraParams":
        return AlgebraParams(self.m, self.n, N)


def parity_of_index(i: int, params: AlgebraParams) -> int:
    """Parity of the index ``i``: 0 for ``i <= m`` and 1 for ``i > m``."""
    if not 1 <= i <= params.m + params.n:
        raise IndexError(f"index {i} outside 1..{params.m + params.n}")
    return 0 if i <= params.m else 1


class Element:
    """Exact linear combination of words in the generators of a system.

    Terms with zero coefficient are never stored, and the empty word is the
    unit.  Elements are treated as immutable values.
    """

    __slots__ = ("system", "terms", "_hash")

    def __init__(self, system: "RewritingSystem", terms=None):
        self.system = system
        clean: Dict[Word, Rational] = {}
        if terms:
            for w, c in terms.items():
                if c:
                    clean[tuple(w)] = c
        self.terms = clean
        self._hash = None

    # construction helpers -------------------------------------------------
    @classmethod
    def _raw(cls, system, terms: Dict[Word, Rational]) -> "Element":
        # terms must already be free of zeros
        e = cls.__new__(cls)
        e.system = system
        e.terms = terms
        e._hash = None
        return e

    def _check(self, other: "Element"):
        if other.system is not self.system:
            raise ParamsMismatch(
                f"cannot combine elements of {self.system!r} and {other.system!r}"
            )

    def _lift(self, other) -> "Element":
        if isinstance(other, Element):
            self._check(other)
            return other
        return self.system.scalar(other)

    # arithmetic -------------------------------------------------------------
    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            v = out.get(w, 0) + c
            if v:
                out[w] = v
            else:
                out.pop(w, None)
        return Element._raw(self.system, out)

    __radd__ = __add__

    def __neg__(self):
        return Element._raw(self.system, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, Element):
            return self.scale(other)
        self._check(other)
        out: Dict[Word, Rational] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                v = out.get(w, 0) + c1 * c2
                if v:
                    out[w] = v
                else:
                    out.pop(w, None)
        return Element._raw(self.system, out)

    def __rmul__(self, other):
        if isinstance(other, Element):  # pragma: no cover - handled by __mul__
            return other.__mul__(self)
        return self.scale(other)

    def scale(self, c) -> "Element":
        c = as_scalar(c)
        if not c:
            return Element._raw(self.system, {})
        return Element._raw(self.system, {w: c * v for w, v in self.terms.items()})

    def __truediv__(self, c):
        return self.scale(Fraction(1) / as_scalar(c))

    # comparison -------------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Element):
            return self.system is other.system and self.terms == other.terms
        try:
            other = as_scalar(other)
        except TypeError:
            return NotImplemented
        if not other:
            return not self.terms
        return self.terms == {(): other}

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((id(self.system), frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __iter__(self) -> Iterator[Tuple[Word, Rational]]:
        return iter(sorted(self.terms.items(), key=lambda kv: (len(kv[0]), kv[0])))

    def __len__(self):
        return len(self.terms)

    # grading ----------------------------------------------------------------
    def parities(self) -> set:
        p = self.system.parity
        return {sum(p(g) for g in w) & 1 for w in self.terms}

    def parity(self) -> int:
        """Parity of a homogeneous element (zero counts as even)."""
        ps = self.parities()
        if len(ps) > 1:
            raise ValueError("element is not homogeneous")
        return ps.pop() if ps else 0

    def homogeneous_parts(self) -> Dict[int, "Element"]:
        p = self.system.parity
        parts: Dict[int, Dict[Word, Rational]] = {0: {}, 1: {}}
        for w, c in self.terms.items():
            parts[sum(p(g) for g in w) & 1][w] = c
        return {k: Element._raw(self.system, v) for k, v in parts.items() if v}

    def constant(self) -> Rational:
        return self.terms.get((), 0)

    def max_degree(self, degree) -> int:
        """Largest value of ``degree(word)`` over the terms (-1 for zero)."""
        return max((degree(w) for w in self.terms), default=-1)

    def part(self, predicate) -> "Element":
        return Element._raw(
            self.system, {w: c for w, c in self.terms.items() if predicate(w)}
        )

    # rendering --------------------------------------------------------------
    def render(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for w, c in self:
            c = Fraction(c)
            sign = "-" if c < 0 else "+"
            a = abs(c)
            mono = "*".join(self.system.render_generator(g) for g in w)
            if not w:
                body = render_scalar(a)
            elif a == 1:
                body = mono
            elif a.denominator == 1:
                body = f"{a.numerator}*{mono}"
            else:
                body = f"({render_scalar(a)})*{mono}"
            pieces.append((sign, body))
        head_sign, head = pieces[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    __str__ = render

    def __repr__(self):
        return f"<{self.system!r}: {self.render()}>"


def sum_elements(system, items: Iterable[Element]) -> Element:
    out: Dict[Word, Rational] = {}
    for e in items:
        for w, c in e.terms.items():
            v = out.get(w, 0) + c
            if v:
                out[w] = v
            else:
                out.pop(w, None)
    return Element._raw(system, out)
