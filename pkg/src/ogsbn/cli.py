"""
Command line front end.

    ogsbn convert --to ogs "[-2,-1,-4,-3]"
    ogsbn length "tau2*tau3*tau4^3*tau5^2"
    ogsbn descents "tau3^-2*tau4^-1*tau5^3"
    ogsbn factorize --mode uv "tau3^2*tau4^3*tau5^-2*tau7^4*tau8^2*tau9^4"
    ogsbn verify --check all --n 4

Exit status is 0 on success, 1 for a domain error (or a failed
verification) and 2 for a malformed expression.
"""

from __future__ import annotations

import argparse
import json
import sys

from .factor import uv_factorize
from .metrics import descents, length, normal_form
from .notation import ElementExpr, ParseError, parse
from .oracle import CHECKS, verify
from .sn import NotInSdotError, elementary_factorize, is_in_sdot, tau_to_t

__all__ = ["main", "build_parser", "run"]

EXIT_OK, EXIT_DOMAIN, EXIT_PARSE = 0, 1, 2


class DomainError(ValueError):
    pass


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, default=None, help="rank (default: inferred from the expression)")
    common.add_argument("--json", action="store_true", help="print JSON instead of text")

    parser = argparse.ArgumentParser(prog="ogsbn", description="Canonical forms, lengths and descents in B_n.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("convert", parents=[common], help="rewrite an element in another representation")
    p.add_argument("--to", required=True, choices=["window", "word", "ogs", "t-ogs", "normal"])
    p.add_argument("expr")

    for name, help in (("length", "Coxeter length"), ("descents", "descent set")):
        p = sub.add_parser(name, parents=[common], help=help)
        p.add_argument("expr")

    p = sub.add_parser("factorize", parents=[common], help="elementary or u·v factorization")
    p.add_argument("--mode", required=True, choices=["elementary", "uv"])
    p.add_argument("expr")

    p = sub.add_parser("verify", parents=[common], help="run a brute-force verification suite")
    p.add_argument("--check", required=True, choices=[*CHECKS, "all"])
    return parser


def _convert(expr: ElementExpr, to: str) -> tuple[str, dict]:
    w = expr.permutation
    if to == "window":
        return str(w), {"window": list(w.window)}
    if to == "word":
        nf = normal_form(w)
        text = str(nf.word) or "e"
        return text, {"word": list(nf.word.letters)}
    if to == "ogs":
        e = expr.ogs
        return str(e), {"exponents": list(e.exps)}
    if to == "t-ogs":
        e = expr.ogs
        if not is_in_sdot(e):
            raise DomainError(f"{e} is not in the parabolic S_n (its window has negative entries)")
        s = tau_to_t(e)
        return str(s), {"exponents": list(s.exps)}
    nf = normal_form(w)
    text = "y: " + " ".join(map(str, nf.y)) + "\nword: " + (str(nf.word) or "e")
    return text, {"y": list(nf.y), "word": list(nf.word.letters), "length": nf.length}


def _factorize(expr: ElementExpr, mode: str) -> tuple[str, dict]:
    e = expr.ogs
    if mode == "elementary":
        try:
            f = elementary_factorize(e)
        except NotInSdotError as err:
            raise DomainError(str(err)) from None
        return str(f), {"z": f.z, "factors": [str(x) for x in f.factors], "boundaries": list(f.boundaries)}
    f = uv_factorize(e)
    return str(f), {"us": [str(u) for u in f.us], "ps": list(f.ps)}


def run(argv: list[str] | None = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    args = build_parser().parse_args(argv)

    if args.command == "verify":
        if args.n is None:
            print("error: verify needs --n", file=err)
            return EXIT_DOMAIN
        names = list(CHECKS) if args.check == "all" else [args.check]
        try:
            reports = [verify(name, args.n) for name in names]
        except ValueError as exc:
            print(f"error: {exc}", file=err)
            return EXIT_DOMAIN
        if args.json:
            doc = {"input": args.check, "rank": args.n, "representation": "report",
                   "result": {"reports": [r.to_dict() for r in reports]}}
            print(json.dumps(doc, ensure_ascii=False), file=out)
        else:
            for r in reports:
                print(r, file=out)
                for f in r.failures[:1]:
                    print(f"  first failure: {f['input']}: expected {f['expected']}, got {f['actual']}", file=out)
        return EXIT_OK if all(r.passed for r in reports) else EXIT_DOMAIN

    try:
        expr = parse(args.expr, args.n)
    except ParseError as exc:
        print(f"parse error: {exc}", file=err)
        return EXIT_PARSE
    except ValueError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_DOMAIN

    try:
        if args.command == "convert":
            representation = args.to
            text, result = _convert(expr, args.to)
        elif args.command == "length":
            representation = "length"
            n = length(expr.ogs)
            text, result = str(n), {"length": n}
        elif args.command == "descents":
            representation = "descents"
            d = descents(expr.permutation)
            text, result = str(d), {"descents": list(d)}
        else:
            representation = args.mode
            text, result = _factorize(expr, args.mode)
    except DomainError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_DOMAIN

    if args.json:
        result = {"text": text, **result}
        doc = {"input": args.expr, "rank": expr.rank, "representation": representation, "result": result}
        print(json.dumps(doc, ensure_ascii=False), file=out)
    else:
        print(text, file=out)
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
