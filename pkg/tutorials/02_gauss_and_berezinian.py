"""Gauss factors of T(u) and the quantum Berezinian.

Run with ``python3 tutorials/02_gauss_and_berezinian.py``.
"""

from fractions import Fraction

from superyangian.berezinian import (
    berezinian_product_form,
    berezinian_root,
    berezinian_sum_form,
    centrality_check,
)
from superyangian.core import AlgebraParams
from superyangian.tmatrix import build_T, gauss_decompose, recomposition_mismatches, rtt_residual

p = AlgebraParams(1, 1, 3)
T = build_T(p)

# The defining relations in matrix form leave nothing behind.
print(rtt_residual(p).summary())

# T = F D E with unitriangular F, E and diagonal D.
g = gauss_decompose(T)
print("mismatches after recomposition:", recomposition_mismatches(g, T))
for r in (1, 2):
    print(f"d_2^({r}) =", g.dc(2, r).render())

# The Berezinian from permutation sums and from the Gauss factors.
b_sum = berezinian_sum_form(p, T)
b_prod = berezinian_product_form(g, p)
print("forms agree:", b_sum == b_prod)
print("b^(1) =", b_prod.coeff(1).render())
print("b^(2) =", b_prod.coeff(2).render())

# Its coefficients are central.
print(centrality_check(p, b_prod).summary())

# For m > n there is a root b~ with b(u) = b~(u) ... b~(u-m+n+1).
q = AlgebraParams(2, 0, 3)
root, rep = berezinian_root(q, f=[1, Fraction(1, 2)])
print(rep.summary())
print("b~^(1) =", root.coeffs[1].render())
