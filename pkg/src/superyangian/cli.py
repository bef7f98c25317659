"""Command-line interface.

Exit codes: 0 when everything checked out, 1 when a computation ran but found
nonzero residuals (or a module raised), 2 for usage, parse and bounds errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable, Dict, List, Optional

from .core import AlgebraParams
from .normal_form import ParseError, yangian

MAX_SIZE = 6
MAX_ORDER = 8

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _params(args, need_order: bool = True) -> AlgebraParams:
    m, n = args.m, args.n
    N = getattr(args, "N", None)
    N = 1 if N is None else N
    if m < 0 or n < 0 or m + n < 1:
        raise UsageError("need m, n >= 0 and m + n >= 1")
    if N < 1:
        raise UsageError("need N >= 1")
    if not args.max_bounds_override:
        if m + n > MAX_SIZE:
            raise UsageError(f"m + n = {m + n} exceeds the default bound {MAX_SIZE} "
                             "(pass --max-bounds-override)")
        if need_order and N > MAX_ORDER:
            raise UsageError(f"N = {N} exceeds the default bound {MAX_ORDER} "
                             "(pass --max-bounds-override)")
    return AlgebraParams(m, n, N)


def _emit(args, payload, text: str):
    if args.json:
        print(json.dumps(payload, sort_keys=False))
    else:
        print(text)


# --- subcommands ----------------------------------------------------------------------

def cmd_normalform(args) -> int:
    p = _params(args, need_order=False)
    Y = yangian(p.m, p.n)
    expr = args.expr if args.expr is not None else args.expr_pos
    if expr is None:
        raise UsageError("no expression given")
    e = Y.reduce(Y.parse(expr))
    _emit(args, {"m": p.m, "n": p.n, "expr": expr, "normal_form": e.render()}, e.render())
    return EXIT_OK


def cmd_gauss(args) -> int:
    from .tmatrix import build_T, gauss_decompose

    p = _params(args)
    g = gauss_decompose(build_T(p))
    if args.json:
        print(json.dumps({"m": p.m, "n": p.n, "N": p.N, **g.to_json()}))
        return EXIT_OK
    D = p.size
    for r in range(1, p.N + 1):
        for i in range(1, D + 1):
            print(f"d[{i}]^({r}) = {g.dc(i, r).render()}")
        for i in range(1, D + 1):
            for j in range(i + 1, D + 1):
                print(f"e[{i},{j}]^({r}) = {g.ec(i, j, r).render()}")
        for i in range(1, D + 1):
            for j in range(i + 1, D + 1):
                print(f"f[{j},{i}]^({r}) = {g.fc(j, i, r).render()}")
    return EXIT_OK


def _report_exit(args, rep) -> int:
    if args.json:
        print(rep.dumps())
    else:
        print(rep.summary())
        for f in rep.sort().failures[:20]:
            print(f"  {f.family} {f.indices} {f.levels}: {f.residual}")
        if len(rep.failures) > 20:
            print(f"  ... {len(rep.failures) - 20} more")
        for note in rep.notes:
            print(f"  note: {note}")
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_rtt(args) -> int:
    from .tmatrix import rtt_residual

    return _report_exit(args, rtt_residual(_params(args)))


def _parse_f(text: Optional[str]):
    from .core import as_scalar

    if text is None:
        raise UsageError("--f is required for mu (comma-separated coefficients, e.g. 1,1/2)")
    try:
        return [as_scalar(x.strip()) for x in text.split(",")]
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad --f series: {exc}") from None


def cmd_map(args) -> int:
    from . import morphisms as M

    p = _params(args, need_order=False)
    Y = yangian(p.m, p.n)
    if args.expr is None:
        raise UsageError("--expr is required")
    e = Y.reduce(Y.parse(args.expr))
    name = args.name
    if name == "rho":
        out = M.rho_map(e)
    elif name == "omega":
        out = M.omega_map(e)
    elif name == "zeta":
        out = M.zeta_map(e)
    elif name in ("psi", "phi"):
        if args.k is None or args.k < 0:
            raise UsageError(f"--k >= 0 is required for {name}")
        out = M.psi_map(e, args.k) if name == "psi" else M.phi_map(e, args.k)
    elif name == "mu":
        out = M.mu_f(e, _parse_f(args.f))
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(f"unknown map {name}")
    tgt = out.system
    _emit(args, {"map": name, "source": [p.m, p.n], "target": [tgt.m, tgt.n],
                 "image": out.render()}, out.render())
    return EXIT_OK


def _suite_table() -> Dict[str, Callable]:
    from . import berezinian as B
    from . import morphisms as M
    from . import presentations as P
    from .report import RelationReport
    from .tmatrix import rtt_residual

    def hopf(p):
        rep = RelationReport("hopf", p.m, p.n, p.N)
        rep.merge(M.check_coassociativity(p))
        rep.merge(M.check_counit(p))
        return rep

    def kappa_pbw(p):
        rank, count = M.kappa_pbw_rank(p, p.N, p.N)
        rep = RelationReport("kappa-pbw", p.m, p.n, p.N)
        rep.record("rank deficit", (), (p.N,), count - rank)
        rep.notes.append(f"{count} ordered monomials of deg_1 <= {p.N}, rank {rank} under kappa_{p.N}")
        return rep

    def morphisms(p):
        Y = yangian(p.m, p.n)
        rep = RelationReport("morphisms", p.m, p.n, p.N)
        for hom in (M.rho(Y), M.omega(Y), M.zeta(Y), M.psi(Y, 1)):
            rep.merge(M.check_homomorphism(hom, p.N))
        rep.merge(M.check_involutions(p))
        rep.merge(M.check_psi_shift(p, 1))
        return rep

    table = {name: (lambda fn: lambda p, s: P.run_suite(fn, p, kappa_sample=s))(name)
             for name in P.SUITES}
    table.update({
        "rtt": lambda p, s: rtt_residual(p),
        "zeta-gauss": lambda p, s: M.check_zeta_gauss(p),
        "coproduct-twist": lambda p, s: M.check_coproduct_twist(p),
        "hopf": lambda p, s: hopf(p),
        "kappa-pbw": lambda p, s: kappa_pbw(p),
        "morphisms": lambda p, s: morphisms(p),
        "centrality": lambda p, s: B.centrality_check(p),
        "pbw-count": lambda p, s: P.pbw_count_check(p, p.N),
    })
    return table


SUITE_NAMES = ["lemma5.1", "theorem2", "lemma6", "theorem3", "prop8.1", "gauss-recursion",
               "root-vectors", "rtt", "zeta-gauss", "coproduct-twist", "hopf", "kappa-pbw",
               "morphisms", "centrality", "pbw-count"]


def cmd_verify(args) -> int:
    p = _params(args)
    if not 0 <= args.sample <= 1:
        raise UsageError("--sample must lie in [0, 1]")
    table = _suite_table()
    if args.suite not in table:
        raise UsageError(f"unknown suite {args.suite}")
    if args.suite in ("lemma5.1", "theorem2") and (p.m, p.n) != (2, 1):
        raise UsageError(f"suite {args.suite} is defined for --m 2 --n 1 only")
    return _report_exit(args, table[args.suite](p, args.sample))


def cmd_berezinian(args) -> int:
    from .berezinian import berezinian_product_form, berezinian_sum_form
    from .tmatrix import build_T, gauss_decompose

    p = _params(args)
    forms = {}
    if args.form in ("sum", "both"):
        forms["sum"] = berezinian_sum_form(p)
    if args.form in ("product", "both"):
        forms["product"] = berezinian_product_form(gauss_decompose(build_T(p)), p)
    equal = None
    if len(forms) == 2:
        equal = forms["sum"] == forms["product"]
    if args.json:
        payload = {"m": p.m, "n": p.n, "N": p.N}
        payload.update({k: v.to_json() for k, v in forms.items()})
        if equal is not None:
            payload["equal"] = equal
        print(json.dumps(payload))
    else:
        for name, b in forms.items():
            for r in range(1, p.N + 1):
                print(f"{name} b^({r}) = {b.coeff(r).render()}")
        if equal is not None:
            print("forms agree" if equal else "forms DIFFER")
    status = EXIT_FAIL if equal is False else EXIT_OK
    for rep in _berezinian_checks(args, p):
        status = max(status, _report_exit(args, rep))
    return status


def _berezinian_checks(args, p):
    from . import berezinian as B

    wanted = [c.strip() for c in (args.check or "").split(",") if c.strip()]
    bad = set(wanted) - {"central", "leading", "root"}
    if bad:
        raise UsageError(f"unknown check(s): {', '.join(sorted(bad))}")
    out = []
    if "central" in wanted:
        out.append(B.centrality_check(p))
    if "leading" in wanted:
        rep = None
        for r in range(1, p.N + 1):
            part = B.leading_term_check(p, r)
            rep = part if rep is None else rep.merge(part)
        out.append(rep)
    if "root" in wanted:
        out.append(B.berezinian_root(p)[1])
    return out


# --- parser ----------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--m", type=int, required=True)
    common.add_argument("--n", type=int, required=True)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--threads", type=int, default=1,
                        help="accepted for compatibility; work runs sequentially")
    common.add_argument("--max-bounds-override", action="store_true",
                        help=f"allow m+n > {MAX_SIZE} or N > {MAX_ORDER}")
    order = argparse.ArgumentParser(add_help=False)
    order.add_argument("--N", type=int, default=3, metavar="ORDER", help="truncation order")

    ap = argparse.ArgumentParser(prog="superyangian",
                                 description="Exact computations in the super Yangian Y(gl(m|n)).")
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("normalform", parents=[common], help="PBW normal form of an expression")
    s.add_argument("expr_pos", nargs="?", metavar="EXPR")
    s.add_argument("--expr")
    s.set_defaults(func=cmd_normalform)

    s = sub.add_parser("gauss", parents=[common, order], help="Gauss coefficients d, e, f")
    s.set_defaults(func=cmd_gauss)

    s = sub.add_parser("rtt-check", parents=[common, order], help="RTT residual")
    s.set_defaults(func=cmd_rtt)

    s = sub.add_parser("map", parents=[common], help="apply rho, omega, zeta, phi, psi or mu_f")
    s.add_argument("--name", required=True, choices=["rho", "omega", "zeta", "phi", "psi", "mu"])
    s.add_argument("--k", type=int)
    s.add_argument("--f", help="scalar series coefficients f_0,f_1,... (f_0 = 1)")
    s.add_argument("--expr")
    s.set_defaults(func=cmd_map)

    s = sub.add_parser("verify", parents=[common, order], help="run a relation suite")
    s.add_argument("--suite", required=True, choices=SUITE_NAMES)
    s.add_argument("--sample", type=float, default=0.0,
                   help="fraction of instances re-checked inside U(gl)^(x)N")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("berezinian", parents=[common, order], help="quantum Berezinian coefficients")
    s.add_argument("--form", choices=["sum", "product", "both"], default="both")
    s.add_argument("--check", help="comma-separated extra checks: central, leading, root")
    s.set_defaults(func=cmd_berezinian)
    return ap


def main(argv: Optional[List[str]] = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:  # module failures are reported, not raised
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
