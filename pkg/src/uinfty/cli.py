"""Command-line front end.

Exit codes: 0 when every assertion passes, 1 on an assertion failure,
2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .exact import as_scalar
from .fock import FockVector
from .grmod import gr_basis, theta_apply
from .oracle import diagonal_shift_report, in_qinf
from .parse import ParseError, parse_element, parse_uelement, parse_vector
from .props import SUITES, CheckResult, counterexample_element, run_suite
from .uinf import circ_n, diamond, star_n

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _rational(text: str):
    try:
        return as_scalar(Fraction(text))
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")


def _emit_records(records: list, as_json: bool, out) -> None:
    if as_json:
        out.write(json.dumps([r.to_dict() for r in records], sort_keys=True, ensure_ascii=False, indent=1))
        out.write("\n")
        return
    for r in records:
        params = " ".join(f"{k}={v}" for k, v in r.parameters.items())
        line = f"{'PASS' if r.passed else 'FAIL'}  {r.name:<15} {params}"
        if r.detail:
            line += f"  -- {r.detail}"
        out.write(line + "\n")
    n_fail = sum(not r.passed for r in records)
    out.write(f"{len(records) - n_fail}/{len(records)} passed\n")


def cmd_product(args, out) -> int:
    if args.kind == "diamond":
        if args.n is not None:
            raise UsageError("diamond takes no --n")
        a, b = parse_uelement(args.left), parse_uelement(args.right)
        result = diamond(a, b)
    else:
        if args.n is None or args.n < 0:
            raise UsageError(f"{args.kind} needs --n N with N >= 0")
        u, v = parse_vector(args.left), parse_vector(args.right)
        fn = circ_n if args.kind == "circ" else star_n
        result = fn(u, v, args.n)
    if args.json:
        out.write(json.dumps({"kind": args.kind, "n": args.n, "result": str(result)}, sort_keys=True) + "\n")
    else:
        out.write(f"{result}\n")
    return EXIT_OK


def _report_text(rep) -> str:
    if rep.member:
        return f"member (columns checked: {rep.checked_columns})"
    w = rep.witness
    return f"not member: column {w.column}, class {FockVector({w.partition: 1})} -> {w.image}"


def cmd_check_qinf(args, out) -> int:
    elem = parse_element(args.element)
    if isinstance(elem, FockVector):
        raise UsageError("check-qinf needs a matrix literal like '[a(-1)|0>]{1,1}'")
    rep = in_qinf(elem, lam=args.lam)
    if args.json:
        out.write(json.dumps({"element": str(elem), **rep.to_dict()}, sort_keys=True) + "\n")
    else:
        out.write(f"{elem}\n{_report_text(rep)}\n")
    return EXIT_OK


def cmd_theta(args, out) -> int:
    elem = parse_uelement(args.element)
    records = []
    for cls in gr_basis(args.level):
        img = theta_apply(elem, cls, lam=args.lam)
        records.append({"class": str(cls), "image": str(img)})
    if args.json:
        out.write(json.dumps(records, sort_keys=True) + "\n")
    else:
        for r in records:
            out.write(f"{r['class']}  ->  {r['image']}\n")
    return EXIT_OK


def cmd_counterexample(args, out) -> int:
    if args.n_max < 1:
        raise UsageError("--n-max must be >= 1")
    records = []
    for n in range(1, args.n_max + 1):
        e = counterexample_element(n)
        rep = diagonal_shift_report(e)
        w = rep.shifted.witness
        ones = (1,) * (n - 1)
        factor = None
        if w is not None and w.partition == ones:
            c = w.image.coeff(ones)
            if w.image == FockVector({ones: c}) and c.is_constant():
                factor = c.constant()
        ok = rep.original.member and not rep.shifted.member and factor == 2
        summary = (
            f"{'member' if rep.original.member else 'non-member'} / "
            f"shifted {'member' if rep.shifted.member else 'non-member'} / "
            f"witness factor {factor}"
        )
        records.append(CheckResult("counterexample", {"n": n, "result": summary}, ok, None if ok else summary))
    _emit_records(records, args.json, out)
    return EXIT_OK if all(r.passed for r in records) else EXIT_FAIL


def cmd_verify(args, out) -> int:
    records = run_suite(args.suite)
    _emit_records(records, args.json, out)
    return EXIT_OK if all(r.passed for r in records) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    def global_flags(suppress: bool) -> argparse.ArgumentParser:
        # accepted before or after the subcommand; the subparser copies must
        # not reset a value given before it
        g = argparse.ArgumentParser(add_help=False)
        g.add_argument(
            "--json",
            action="store_true",
            default=argparse.SUPPRESS if suppress else False,
            help="machine-readable output",
        )
        g.add_argument(
            "--lambda",
            dest="lam",
            type=_rational,
            default=argparse.SUPPRESS if suppress else None,
            help="evaluate at a numeric highest weight instead of the formal one",
        )
        return g

    common = global_flags(True)
    p = argparse.ArgumentParser(prog="uinfty", description=__doc__, parents=[global_flags(False)])
    sub = p.add_subparsers(dest="command", required=True)

    pr = sub.add_parser("product", parents=[common], help="circ_n, star_n or diamond product")
    pr.add_argument("kind", choices=["circ", "star", "diamond"])
    pr.add_argument("left")
    pr.add_argument("right")
    pr.add_argument("--n", type=int, default=None)
    pr.set_defaults(func=cmd_product)

    q = sub.add_parser("check-qinf", parents=[common], help="decide membership in Q^infty(M(1))")
    q.add_argument("element")
    q.set_defaults(func=cmd_check_qinf)

    t = sub.add_parser("theta", parents=[common], help="action on the basis classes of one level")
    t.add_argument("element")
    t.add_argument("--level", type=int, required=True)
    t.set_defaults(func=cmd_theta)

    c = sub.add_parser("counterexample", parents=[common], help="check the family E_n")
    c.add_argument("--n-max", type=int, default=4)
    c.set_defaults(func=cmd_counterexample)

    v = sub.add_parser("verify", parents=[common], help="run a verification suite")
    v.add_argument("--suite", required=True, choices=sorted(SUITES) + ["all"])
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        return args.func(args, out)
    except (ParseError, UsageError, ValueError) as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
