"""Command line: ``quasimod <subcommand> ...``.

Exit codes: 0 success, 1 a verification failed, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import coeffsolver, identities, wz
from .brackets import BracketParams, DepthBoundViolation, bracket
from .expr import EvalError, ParseError, evaluate
from .numkernel import fmt_rational
from .qseries import tau
from .ring import GradingError, format_poly, to_qseries
from .spaces import decompose

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _form_json(f) -> dict:
    return {
        "weight": f.weight,
        "depth": f.depth,
        "expr": format_poly(f.poly),
        "poly": f.poly.to_records(),
    }


def cmd_expand(args) -> int:
    f = evaluate(args.expr)
    s = to_qseries(f, args.order)
    text = ",".join(fmt_rational(c) for c in s.to_list()) if args.format == "list" else s.to_json()
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return EXIT_OK


def cmd_bracket(args) -> int:
    f = evaluate(args.f)
    g = evaluate(args.g)
    override = None
    if any(v is not None for v in (args.k, args.s, args.l, args.t)):
        override = BracketParams(
            args.n,
            f.weight if args.k is None else args.k,
            f.exact_depth if args.s is None else args.s,
            g.weight if args.l is None else args.l,
            g.exact_depth if args.t is None else args.t,
        )
    h = bracket(f, g, args.n, override)
    print(json.dumps(_form_json(h)))
    return EXIT_OK


def cmd_verify(args) -> int:
    names = sorted(identities.VERIFIERS) if args.identity == "all" else [args.identity]
    reports = [identities.VERIFIERS[name](args.nmax) for name in names]
    if args.json:
        print(json.dumps([r.to_dict() for r in reports], indent=2))
    else:
        for r in reports:
            print(r.summary())
    ok = all(r.passed for r in reports)
    if len(reports) > 1 and not args.json:
        print(f"overall: {'PASS' if ok else 'FAIL'} ({sum(r.passed for r in reports)}/{len(reports)} identities)")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_decompose(args) -> int:
    f = evaluate(args.expr)
    d = decompose(f)
    ok = d.reassemble() == f.poly
    print(
        json.dumps(
            {
                "weight": d.weight,
                "parts": [{"j": j, "modular": format_poly(m)} for j, m in d.parts],
                "line": fmt_rational(d.line),
                "reassembles": ok,
            }
        )
    )
    return EXIT_OK if ok else EXIT_FAIL


def cmd_solve_coeffs(args) -> int:
    try:
        v = coeffsolver.solve_and_confirm(args.k, args.l, args.s, args.t, args.n)
    except coeffsolver.CoefficientDiscrepancy as exc:
        print(f"discrepancy: {exc}", file=sys.stderr)
        return EXIT_FAIL
    print("(" + ",".join(str(x) for x in v) + ")")
    return EXIT_OK


def cmd_wz(args) -> int:
    ok = True
    for N in range(2, args.max_N + 1):
        rep = wz.certificate_check(N)
        ok &= rep.passed
        print(
            f"N={N} checked={len(rep.checked_r)} skipped={rep.skipped_r} failed={rep.failed_r}"
            f" ratio_ok={rep.ratio_ok} closed_form_ok={rep.closed_form_ok} A={wz.a_direct(N)}"
        )
    print(f"certificate: {'PASS' if ok else 'FAIL'}")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_tau(args) -> int:
    for n in range(1, args.max_n + 1):
        print(n, tau(n))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="quasimod", description="Exact Rankin-Cohen brackets on quasimodular forms.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    e = sub.add_parser("expand", help="q-expansion of an expression")
    e.add_argument("expr")
    e.add_argument("--order", type=int, default=20)
    e.add_argument("--out")
    e.add_argument("--format", choices=("json", "list"), default="json")
    e.set_defaults(func=cmd_expand)

    b = sub.add_parser("bracket", help="Rankin-Cohen bracket of two expressions")
    b.add_argument("--f", required=True)
    b.add_argument("--g", required=True)
    b.add_argument("--n", type=int, required=True)
    for name in ("k", "s", "l", "t"):
        b.add_argument(f"--{name}", type=int)
    b.set_defaults(func=cmd_bracket)

    v = sub.add_parser("verify", help="run identity verifiers")
    v.add_argument("identity", choices=sorted(identities.VERIFIERS) + ["all"])
    v.add_argument("--nmax", type=int)
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify)

    d = sub.add_parser("decompose", help="split into derivatives of modular forms and D^j E2")
    d.add_argument("expr")
    d.set_defaults(func=cmd_decompose)

    c = sub.add_parser("solve-coeffs", help="re-derive bracket coefficients from the constraint kernel")
    for name in ("k", "s", "l", "t", "n"):
        c.add_argument(f"--{name}", type=int, required=True)
    c.set_defaults(func=cmd_solve_coeffs)

    w = sub.add_parser("wz", help="check the certificate and A(N) closed form")
    w.add_argument("--max-N", dest="max_N", type=int, default=40)
    w.set_defaults(func=cmd_wz)

    t = sub.add_parser("tau", help="print Ramanujan tau(n)")
    t.add_argument("--max-n", dest="max_n", type=int, default=20)
    t.set_defaults(func=cmd_tau)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (ParseError, EvalError, GradingError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DepthBoundViolation as exc:
        print(f"depth bound violated: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
