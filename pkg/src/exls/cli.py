"""Command-line interface: ``exls <command> ...``."""

from __future__ import annotations

import argparse
import json
import sys

from .e16k16 import HeadroomError, bracket_e16, bracket_k16, op_A, op_iota
from .embeddings import psi
from .parsing import ALGEBRAS, ParseError, parse_element
from .report import EXIT_FAIL, EXIT_PASS, EXIT_USAGE
from .repn import SliceWindowError, enumerate_slice
from .suites import SuiteOptions, resolve_suite, run_suite, suite_names
from .tables import TABLES, render_table
from .vfalgebras import bracket_e44, bracket_e510

_BRACKETS = {"e510": bracket_e510, "e44": bracket_e44, "e16": bracket_e16, "k16": bracket_k16}


class UsageError(Exception):
    pass


def _n_range(text: str) -> tuple[int, int]:
    try:
        if ".." in text:
            a, b = text.split("..", 1)
            lo, hi = int(a), int(b)
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a..b or an integer, got {text!r}") from None
    if lo < 0 or hi < lo:
        raise argparse.ArgumentTypeError(f"bad range {text!r}")
    return lo, hi


def _seed(text: str) -> int:
    v = int(text)
    if not 0 <= v < 2 ** 64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="exls", description="Exact computations in E(5,10), E(4,4), "
                                "E(1,6) and K(1,6), and checks of the embeddings between them.")
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("bracket", help="bracket of two elements")
    b.add_argument("algebra", choices=ALGEBRAS)
    b.add_argument("a")
    b.add_argument("b")

    for name, helptext in (("iota", "iota(f) = f + A(f) in K(1,6)"), ("A", "the operator A on K(1,6)")):
        s = sub.add_parser(name, help=helptext)
        s.add_argument("expr")
        s.add_argument("--window", type=int, default=None, help="largest t-degree allowed in the output")

    s = sub.add_parser("psi", help="image of an E(1,6) element in E(5,10)")
    s.add_argument("expr")

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", help="suite name, or 'all'")
    v.add_argument("--seed", type=_seed, default=0)
    v.add_argument("--json", action="store_true")
    v.add_argument("--trials", type=int, default=None)
    v.add_argument("--twindow", type=int, default=None)
    v.add_argument("--n", dest="n_range", type=_n_range, default=None)
    v.add_argument("--quick", action="store_true")

    t = sub.add_parser("table", help="print the iota or Psi table")
    t.add_argument("name", choices=TABLES)
    t.add_argument("--format", choices=("md", "json"), default="md")

    d = sub.add_parser("decompose", help="bases of the slices g_(r,k)")
    d.add_argument("--r", type=int, required=True)
    d.add_argument("--kmax", type=int, required=True)
    d.add_argument("--x1max", type=int, default=3)
    d.add_argument("--json", action="store_true")

    sub.add_parser("suites", help="list suite names")
    return p


def _cmd_bracket(args) -> int:
    a = parse_element(args.algebra, args.a)
    b = parse_element(args.algebra, args.b)
    print(_BRACKETS[args.algebra](a, b))
    return EXIT_PASS


def _cmd_op(args, op) -> int:
    f = parse_element("k16", args.expr)
    print(op(f, args.window))
    return EXIT_PASS


def _cmd_verify(args) -> int:
    if args.suite != "all":
        try:
            resolve_suite(args.suite)
        except KeyError:
            raise UsageError(f"unknown suite {args.suite!r}; known: {', '.join(suite_names())}")
    if args.trials is not None and args.trials < 1:
        raise UsageError("--trials must be positive")
    if args.twindow is not None and not 1 <= args.twindow <= 8:
        raise UsageError("--twindow must lie in 1..8")
    if args.n_range is not None and args.n_range[1] > 6:
        raise UsageError("--n upper bound must be at most 6")
    opts = SuiteOptions(seed=args.seed, trials=args.trials, twindow=args.twindow,
                        n_range=args.n_range, quick=args.quick)
    rep = run_suite(args.suite, opts)
    print(rep.to_json() if args.json else rep.human())
    return rep.exit_code


def _cmd_decompose(args) -> int:
    if args.r < -1:
        raise UsageError("--r must be at least -1")
    slices = []
    for k in range(2 * args.r - 2, args.kmax + 1):
        slices.append(enumerate_slice(args.r, k, args.x1max))
    if args.json:
        print(json.dumps({"r": args.r, "kmax": args.kmax, "x1max": args.x1max,
                          "slices": [{"k": s.k, "dim": s.dim, "basis": [str(b) for b in s.basis]}
                                     for s in slices]}, indent=2))
    else:
        for s in slices:
            print(f"g_({s.r},{s.k}): dim {s.dim}")
            for b in s.basis:
                print(f"  {b}")
    return EXIT_PASS


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "bracket":
            return _cmd_bracket(args)
        if args.command == "iota":
            return _cmd_op(args, op_iota)
        if args.command == "A":
            return _cmd_op(args, op_A)
        if args.command == "psi":
            print(psi(parse_element("e16", args.expr)))
            return EXIT_PASS
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "table":
            sys.stdout.write(render_table(args.name, args.format))
            return EXIT_PASS
        if args.command == "decompose":
            return _cmd_decompose(args)
        if args.command == "suites":
            print("\n".join(suite_names()))
            return EXIT_PASS
    except (UsageError, ParseError, SliceWindowError, HeadroomError) as exc:
        print(f"exls: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
