"""Checking the relations among Gauss generators and the Drinfeld-type generators.

Run with ``python3 tutorials/03_presentations.py``.
"""

from superyangian.core import AlgebraParams
from superyangian.presentations import (
    GaussContext,
    cartan_matrix,
    run_suite,
    stukopin_generators,
)

p = AlgebraParams(2, 1, 3)
print("Cartan matrix of gl(2|1):", cartan_matrix(p).to_list())

# A few generators written in terms of t_ij^(r).
for g in stukopin_generators(p)[:4]:
    print(f"{g.kind}_{g.i},{g.s} =", g.realization.render())

# Brackets of Gauss coefficients can be evaluated directly.
ctx = GaussContext(p)
print("[e_1^(1), f_1^(1)] =", ctx.br(ctx.e(1, 1), ctx.f(1, 1)).render())

# Whole relation families, with notes where a printed variant disagrees.
for name in ("theorem2", "prop8.1"):
    rep = run_suite(name, p)
    print(rep.summary())
    for note in rep.notes:
        print("  note:", note[:100])

# The same relations re-checked in U(gl(2|1))^(x)3 for a fifth of the instances.
rep = run_suite("theorem2", p, kappa_sample=0.2)
print(rep.summary())
