"""Command-line front end.  Every subcommand is a thin wrapper over library calls.

Exit status: 0 on success, 1 when a verification fails, 2 on bad usage.
"""
from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Callable, Sequence
from fractions import Fraction

from .core import (LinComb, NonConnectedError, ResourceLimitError, antipode, check_antipode,
                   check_bialgebra, check_duality, format_fraction)
from .nsym import MultiSeq, h_coproduct, h_product, nsym_algebra
from .pcseries import check_coproduct_oracle, check_product_oracle, expand_m
from .qsym import deconcat_coproduct_m, duality_pairing, qsym_algebra, quasi_shuffle
from .roctree import (ColourRangeError, RocTree, concat, deconcat_coproduct, dual_tree_algebra,
                      enumerate_trees, grafting_product, pruning_coproduct, tree_algebra)
from .weyl import DEFAULT_SCALES, SingularMatrixError, verify as weyl_verify

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _key_text(key) -> str:
    if isinstance(key, tuple):
        return " ⊗ ".join(_key_text(k) for k in key)
    if isinstance(key, RocTree):
        return key.code or "•"
    if isinstance(key, MultiSeq):
        return key.code or "∅"
    return str(key)


def _pretty_lincomb(x: LinComb) -> str:
    if x.is_zero():
        return "0"
    lines = []
    for key, c in x.items():
        coeff = str(c) if c.denominator == 1 else format_fraction(c)
        lines.append(f"{coeff:>6}  {_key_text(key)}")
    return "\n".join(lines)


def _parse_tree(text: str, n: int | None) -> RocTree:
    try:
        t = RocTree.parse(text)
    except (ValueError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read tree {text!r}: {exc}") from None
    if n is not None and t.max_colour > n:
        raise UsageError(f"tree {text!r} uses colour {t.max_colour} > n = {n}")
    return t


def _parse_multiseq(text: str, n: int | None) -> MultiSeq:
    try:
        i = MultiSeq.parse(text)
    except (ValueError, TypeError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read multisequence {text!r}: {exc}") from None
    if n is not None and i.max_colour > n:
        raise UsageError(f"multisequence {text!r} uses colour {i.max_colour} > n = {n}")
    return i


def _parse_element(text: str, n: int | None) -> LinComb:
    """A single multisequence, or a JSON LinComb ``[{"coeff": .., "key": ..}, ...]``."""
    stripped = text.strip()
    if stripped.startswith("[{"):
        try:
            x = LinComb.from_json(json.loads(stripped), MultiSeq.from_json)
        except (ValueError, KeyError, TypeError) as exc:
            raise UsageError(f"cannot read linear combination {text!r}: {exc}") from None
        for key in x:
            if n is not None and key.max_colour > n:
                raise UsageError(f"{key.code!r} uses colour {key.max_colour} > n = {n}")
        return x
    return LinComb.basis(_parse_multiseq(text, n))


def _colours(args, *keys) -> int:
    return args.n if args.n is not None else max([k.max_colour for k in keys] + [1])


# subcommand handlers return (payload for json, pretty text, exit code)

def cmd_trees_enumerate(args):
    trees = enumerate_trees(args.n, args.k, cap=args.cap)
    return [t.to_json() for t in trees], "\n".join(t.code or "•" for t in trees), EXIT_OK


def cmd_tree_product(args):
    t, u = _parse_tree(args.a, args.n), _parse_tree(args.b, args.n)
    x = grafting_product(t, u) if args.dual else LinComb.basis(concat(t, u))
    return x.to_json(), _pretty_lincomb(x), EXIT_OK


def cmd_tree_coproduct(args):
    t = _parse_tree(args.t, args.n)
    x = deconcat_coproduct(t) if args.dual else pruning_coproduct(t)
    return x.to_json(), _pretty_lincomb(x), EXIT_OK


def _hopf_cmd(algebra: str):
    def handler(args):
        i = _parse_multiseq(args.i, args.n)
        if args.op == "product":
            if args.j is None:
                raise UsageError("product needs two operands")
            j = _parse_multiseq(args.j, args.n)
            x = (LinComb.basis(h_product(i, j)) if algebra == "nsym" else quasi_shuffle(i, j))
        else:
            if args.j is not None:
                raise UsageError(f"{args.op} takes one operand")
            if args.op == "coproduct":
                x = h_coproduct(i) if algebra == "nsym" else deconcat_coproduct_m(i)
            else:
                n = _colours(args, i)
                alg = nsym_algebra(n) if algebra == "nsym" else qsym_algebra(n)
                x = antipode(LinComb.basis(i), alg)
        return x.to_json(), _pretty_lincomb(x), EXIT_OK
    return handler


def cmd_pair(args):
    value = duality_pairing(_parse_element(args.m_side, args.n), _parse_element(args.h_side, args.n))
    text = format_fraction(value)
    return {"pairing": text}, text, EXIT_OK


def cmd_expand(args):
    if args.bound < 0:
        raise UsageError(f"position bound must be >= 0, got {args.bound}")
    p = expand_m(_parse_multiseq(args.i, args.n), args.bound)
    lines = [f"{_key_text(c)}  {m.code or '1'}" for m, c in p.terms.items()]
    return {"bound": p.bound, "terms": p.to_json()}, "\n".join(lines) or "0", EXIT_OK


def _report_result(reports):
    ok = all(reports)
    return ([r.to_json() for r in reports], "\n".join(r.summary() for r in reports),
            EXIT_OK if ok else EXIT_FAIL)


ALGEBRAS: dict[str, Callable] = {
    "tree": tree_algebra,
    "tree-dual": dual_tree_algebra,
    "nsym": nsym_algebra,
    "qsym": qsym_algebra,
}


def cmd_verify_axioms(args):
    name = "tree-dual" if args.algebra == "tree" and args.dual else args.algebra
    alg = ALGEBRAS[name](args.n)
    reports = [check_bialgebra(alg, args.max_weight)]
    if args.antipode:
        reports.append(check_antipode(alg, args.max_weight))
    return _report_result(reports)


def cmd_verify_duality(args):
    return _report_result([
        check_duality(dual_tree_algebra(args.n), tree_algebra(args.n), args.max_weight),
        check_duality(qsym_algebra(args.n), nsym_algebra(args.n), args.max_weight),
    ])


def cmd_verify_oracle(args):
    return _report_result([check_product_oracle(args.n, args.max_weight),
                           check_coproduct_oracle(args.n, args.max_weight)])


def _scales(text: str) -> tuple[Fraction, ...]:
    try:
        scales = tuple(Fraction(s) for s in text.split(","))
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"bad scales {text!r}") from None
    if len(scales) != 4 or not all(scales):
        raise argparse.ArgumentTypeError("need four nonzero scales a1,b1,a2,b2")
    return scales


def cmd_weyl_check(args):
    if args.d < 2:
        raise UsageError(f"dimension must be >= 2, got {args.d}")
    try:
        report = weyl_verify(args.d, args.scales, retries=args.retries)
    except SingularMatrixError as exc:
        msg = str(exc)
        return {"passed": False, "error": msg}, f"FAIL {msg}", EXIT_FAIL
    lines = [f"{'ok  ' if c.residual_is_zero else 'FAIL'} {c.relation}" for c in report.checks]
    lines.append(f"scales used: {', '.join(str(s) for s in report.scales)}")
    return report.to_json(), "\n".join(lines), EXIT_OK if report.passed else EXIT_FAIL


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("json", "pretty"), default="json")
    common.add_argument("-n", type=int, default=None, help="number of colours")

    parser = _Parser(prog="hopftrees", description="Hopf algebras of coloured trees and their relatives.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    trees = sub.add_parser("trees").add_subparsers(dest="action", required=True, parser_class=_Parser)
    p = trees.add_parser("enumerate", parents=[common])
    p.add_argument("-k", type=int, required=True, help="number of edges")
    p.add_argument("--cap", type=int, default=200_000)
    p.set_defaults(func=cmd_trees_enumerate, need_n=True)

    tree = sub.add_parser("tree").add_subparsers(dest="action", required=True, parser_class=_Parser)
    p = tree.add_parser("product", parents=[common])
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--dual", action="store_true", help="grafting instead of concatenation")
    p.set_defaults(func=cmd_tree_product)
    p = tree.add_parser("coproduct", parents=[common])
    p.add_argument("t")
    p.add_argument("--dual", action="store_true", help="deconcatenation instead of pruning")
    p.set_defaults(func=cmd_tree_coproduct)

    for algebra in ("nsym", "qsym"):
        p = sub.add_parser(algebra, parents=[common])
        p.add_argument("op", choices=("product", "coproduct", "antipode"))
        p.add_argument("i")
        p.add_argument("j", nargs="?")
        p.set_defaults(func=_hopf_cmd(algebra))

    p = sub.add_parser("pair", parents=[common])
    p.add_argument("m_side")
    p.add_argument("h_side")
    p.set_defaults(func=cmd_pair)

    p = sub.add_parser("expand", parents=[common])
    p.add_argument("-N", dest="bound", type=int, required=True, help="position bound")
    p.add_argument("i")
    p.set_defaults(func=cmd_expand)

    verify = sub.add_parser("verify").add_subparsers(dest="action", required=True, parser_class=_Parser)
    p = verify.add_parser("axioms", parents=[common])
    p.add_argument("--algebra", choices=("tree", "nsym", "qsym"), required=True)
    p.add_argument("--dual", action="store_true", help="tree: grafting/deconcatenation structure")
    p.add_argument("--antipode", action="store_true", help="also check the antipode")
    p.add_argument("--max-weight", type=int, required=True)
    p.set_defaults(func=cmd_verify_axioms, need_n=True)
    for name, func in (("duality", cmd_verify_duality), ("oracle", cmd_verify_oracle)):
        p = verify.add_parser(name, parents=[common])
        p.add_argument("--max-weight", type=int, required=True)
        p.set_defaults(func=func, need_n=True)

    weyl = sub.add_parser("weyl").add_subparsers(dest="action", required=True, parser_class=_Parser)
    p = weyl.add_parser("check", parents=[common])
    p.add_argument("-d", type=int, required=True, help="dimension of each Weyl pair")
    p.add_argument("--scales", type=_scales, default=DEFAULT_SCALES, help="a1,b1,a2,b2")
    p.add_argument("--retries", type=int, default=3)
    p.set_defaults(func=cmd_weyl_check)
    return parser


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if getattr(args, "need_n", False):
            if args.n is None or args.n < 1:
                raise UsageError("-n N (N >= 1) is required")
            if getattr(args, "max_weight", 0) < 0 or getattr(args, "k", 0) < 0:
                raise UsageError("weights must be >= 0")
        payload, pretty, code = args.func(args)
    except (UsageError, ResourceLimitError, ColourRangeError, NonConnectedError) as exc:
        print(f"hopftrees: error: {exc}", file=err)
        return EXIT_USAGE
    if args.format == "json":
        print(json.dumps(payload, ensure_ascii=False), file=out)
    else:
        print(pretty, file=out)
    if code == EXIT_FAIL and isinstance(payload, list):
        for r in payload:
            if not r.get("passed", True):
                print(f"counterexample: {r['failure']}", file=err)
                break
    return code


def main() -> None:
    sys.exit(run())
