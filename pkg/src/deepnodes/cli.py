"""Command-line interface: ``deepnodes {series,trees,biject,verify,table}``.

Exit codes: 0 success, 1 failed verification, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import os
import sys
from typing import Sequence

from . import genfun
from .asymptotics import ratio_table
from .paths import (
    DecoratedPath,
    InvalidPath,
    SkewPath,
    decorated_to_skew,
    decorated_to_tree,
    skew_to_decorated,
    tree_to_decorated,
)
from .series import SeriesError
from .trees import MAX_GENERATE, InvalidMark, ParseError, decode, encode, generate, stats
from .verify import FAULTS, run_checks

DEFAULT_ORDER = 30
DEFAULT_TABLE_N = 200
DEFAULT_BOUND = 11

ROUTES = {
    "A": ("sqrt", "kernel"),
    "Ah": ("recursive", "closed", "pair"),
    "ph": ("recursive", "closed"),
    "G": ("recursive", "explicit"),
    "dG": ("closed_sum", "derivative", "level_recursion"),
}


class UsageError(Exception):
    pass


def _default_order() -> int:
    raw = os.environ.get("DEEPNODES_ORDER")
    if raw is None:
        return DEFAULT_ORDER
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"DEEPNODES_ORDER must be an integer, got {raw!r}") from None
    if value < 1:
        raise UsageError("DEEPNODES_ORDER must be at least 1")
    return value


def _series(gf: str, order: int, h: int | None, route: str | None):
    routes = ROUTES[gf]
    route = route or routes[0]
    if route not in routes:
        raise UsageError(f"route {route!r} not available for {gf}; choose from {', '.join(routes)}")
    if gf in ("Ah", "ph") and h is None:
        raise UsageError(f"--h is required for {gf}")
    if h is not None and h < 1:
        raise UsageError("--h must be at least 1")
    if gf == "A":
        if route == "kernel":
            v = genfun.kernel(order).v
            return genfun.kernel(order).z * (1 + v)
        return genfun.gf_A(order)
    if gf == "Ah":
        return genfun.gf_A_h(h, order, route)
    if gf == "ph":
        if route == "closed" and h < 2:
            raise UsageError("the closed route for ph needs --h >= 2")
        return genfun.gf_p_h(h, order, route)
    if gf == "G":
        return genfun.gf_G(order, route)
    return genfun.gf_dG(order, route)


def _coeff_json(c):
    if isinstance(c, tuple):
        return [_coeff_json(x) for x in c]
    return str(c)


def cmd_series(args, out) -> int:
    s = _series(args.gf, args.order, args.h, args.route)
    if args.format == "json":
        json.dump({"gf": args.gf, "order": s.order, "coeffs": _coeff_json(s.coeffs)}, out)
        out.write("\n")
    else:
        print(s, file=out)
    return 0


def cmd_trees(args, out) -> int:
    if not 1 <= args.size <= args.bound:
        raise UsageError(f"--size must lie in 1..{args.bound}")
    trees = generate(args.size, args.bound)
    if not args.list:
        print(len(trees), file=out)
        return 0
    for t in trees:
        st = stats(t)
        print(f"{encode(t)} {st.height} {st.deepest} {st.marks}", file=out)
    return 0


def cmd_biject(args, out) -> int:
    src, dst = args.from_, args.to
    if src == "tree":
        tree = decode(args.input)
    elif src == "decorated":
        tree = decorated_to_tree(DecoratedPath(args.input))
    else:
        tree = decorated_to_tree(skew_to_decorated(SkewPath(args.input)))
    if dst == "tree":
        print(encode(tree), file=out)
    elif dst == "decorated":
        print(tree_to_decorated(tree).steps, file=out)
    else:
        print(decorated_to_skew(tree_to_decorated(tree)).steps, file=out)
    return 0


def cmd_verify(args, out) -> int:
    results = run_checks(args.order, args.bound, args.inject)
    width = max(len(r.name) for r in results)
    for r in results:
        print(f"{'PASS' if r.passed else 'FAIL'}  {r.name:<{width}}  {r.detail}".rstrip(), file=out)
    failed = [r for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} checks passed", file=out)
    for r in failed:
        print(f"failed: {r.name}", file=sys.stderr)
    return 1 if failed else 0


def cmd_table(args, out) -> int:
    if args.max_n < 1:
        raise UsageError("--max-n must be at least 1")
    rows = ratio_table(args.max_n, args.digits)
    if args.format == "csv":
        print("nodes,deepest_nodes,trees,ratio", file=out)
        for r in rows:
            print(r.csv(), file=out)
    elif args.format == "json":
        json.dump(
            [
                {
                    "n": r.n,
                    "deepest_total": r.deepest_total,
                    "trees": r.trees,
                    "ratio_num": r.exact.numerator,
                    "ratio_den": r.exact.denominator,
                }
                for r in rows
            ],
            out,
        )
        out.write("\n")
    else:
        w1 = len(str(rows[-1].deepest_total))
        w2 = len(str(rows[-1].trees))
        for r in rows:
            print(f"{r.n:>5}  {r.deepest_total:>{w1}}  {r.trees:>{w2}}  {r.ratio}", file=out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", "-o", help="write to this file instead of stdout")
    common.add_argument("--format", choices=("text", "csv", "json"), default="text")

    parser = argparse.ArgumentParser(
        prog="deepnodes",
        description="Deepest nodes in marked ordered trees: series, trees, paths, tables.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("series", parents=[common], help="print a generating function")
    p.add_argument("--gf", choices=tuple(ROUTES), required=True)
    p.add_argument("--order", type=int)
    p.add_argument("--h", type=int)
    p.add_argument("--route")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("trees", parents=[common], help="count or list trees of a size")
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--list", action="store_true")
    p.add_argument("--bound", type=int, default=DEFAULT_BOUND)
    p.set_defaults(func=cmd_trees)

    p = sub.add_parser("biject", parents=[common], help="convert between trees and paths")
    kinds = ("tree", "decorated", "skew")
    p.add_argument("--from", dest="from_", choices=kinds, required=True)
    p.add_argument("--to", choices=kinds, required=True)
    p.add_argument("input")
    p.set_defaults(func=cmd_biject)

    p = sub.add_parser("verify", parents=[common], help="run the consistency suite")
    p.add_argument("--order", type=int)
    p.add_argument("--bound", type=int, default=DEFAULT_BOUND)
    p.add_argument("--inject", choices=tuple(FAULTS), help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", parents=[common], help="exact average number of deepest nodes")
    p.add_argument("--max-n", type=int, default=DEFAULT_TABLE_N)
    p.add_argument("--digits", type=int, default=6)
    p.set_defaults(func=cmd_table)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if getattr(args, "order", 0) is None:
            args.order = _default_order()
        if getattr(args, "order", 1) < 1:
            raise UsageError("--order must be at least 1")
        if getattr(args, "bound", 1) > MAX_GENERATE:
            raise UsageError(f"--bound cannot exceed {MAX_GENERATE}")
        with contextlib.ExitStack() as stack:
            if args.output:
                try:
                    out = stack.enter_context(open(args.output, "w", encoding="utf-8"))
                except OSError as exc:
                    raise UsageError(f"cannot write {args.output}: {exc.strerror}") from None
            else:
                out = sys.stdout
            return args.func(args, out)
    except (UsageError, ParseError, InvalidMark, InvalidPath, SeriesError, genfun.ClosedFormRange) as exc:
        print(f"deepnodes {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
