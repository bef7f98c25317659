"""Working with PBW normal forms in Y(gl(1|1)) and Y(gl(2|1)).

Run with ``python3 tutorials/01_normal_forms.py``.
"""

from superyangian.core import AlgebraParams
from superyangian.normal_form import pbw_basis, yangian

Y = yangian(1, 1)

# Products built with * stay in the free algebra until reduced.
x = Y.t(1, 2, 1) * Y.t(2, 1, 1)
print("free word      :", x.render())
print("normal form    :", Y.reduce(x).render())

# Odd generators square to zero once reduced.
print("t[1,2,1]^2     :", Y.reduce(Y.t(1, 2, 1) * Y.t(1, 2, 1)).render())

# Text round trip through the parser.
e = Y.parse("t[1,2,2]*t[1,2,1] + 1/2*t[2,2,1]")
print("parsed, reduced:", Y.reduce(e).render())

# Super-commutators come back in normal form.
print("[t12(1), t21(2)]:", Y.supercommutator(Y.t(1, 2, 1), Y.t(2, 1, 2)).render())

# The ordered monomials spanning the degree <= 1 part.
words = pbw_basis(AlgebraParams(1, 1), 1)
print("PBW deg<=1     :", len(words), "monomials")
print("PBW deg<=3     :", len(pbw_basis(AlgebraParams(1, 1), 3)), "monomials")

# Three rewriting strategies produce the same answer.
Y21 = yangian(2, 1)
w = Y21.t(3, 1, 2) * Y21.t(1, 3, 1) * Y21.t(2, 2, 1)
forms = {s: Y21.reduce(w, s) for s in ("fold", "leftmost", "rightmost")}
print("strategies agree:", len({f.render() for f in forms.values()}) == 1)
