"""Command-line front end.

Exit status is 0 on success or a true answer, 1 on a false answer and 2 on
usage errors. Permutations are written as comma-separated windows such as
``1,-3,2``; negative leading entries need no quoting tricks.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path
from typing import Sequence

from . import bqsym, embeddings, hsym, weak
from .perm import (
    RankCapError,
    SignedPermutation,
    check_rank,
    length,
    parse,
    rank_cap,
    render,
    shuffle_perms,
)
from .verify import SUITES, run_suite

_NEGATIVE_TOKEN = re.compile(r"^-\d")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _perm(text: str, what: str = "permutation") -> SignedPermutation:
    try:
        return parse(text)
    except ValueError as exc:
        raise UsageError(f"bad {what} {text.strip()!r}: {exc}") from None


def _pair(a: str, b: str) -> tuple[SignedPermutation, SignedPermutation]:
    u, v = _perm(a), _perm(b)
    if len(u) != len(v):
        raise UsageError(f"size mismatch: {render(u)} has size {len(u)}, {render(v)} has size {len(v)}")
    return u, v


def _int_list(text: str, what: str) -> list[int]:
    body = text.strip().strip("{}()[]")
    try:
        return [int(t) for t in re.split(r"[,\s]+", body) if t]
    except ValueError:
        raise UsageError(f"bad {what} {text!r}") from None


def _load_json(text: str):
    if text.startswith("@"):
        text = Path(text[1:]).read_text()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"bad JSON input: {exc}") from None


def _sum(text: str, basis: str) -> hsym.FormalSum:
    """A permutation (taken in ``basis``) or a JSON sum, inline or as ``@file``."""
    t = text.strip()
    if t.startswith(("{", "@")):
        try:
            return hsym.FormalSum.from_json(_load_json(t))
        except (KeyError, TypeError, ValueError) as exc:
            raise UsageError(f"bad sum {t!r}: {exc}") from None
    return hsym.FormalSum.basis_element(basis, _perm(t))


def _emit(obj, as_json: bool) -> None:
    if as_json:
        print(json.dumps(obj.to_json(), sort_keys=True))
    else:
        print(obj)


# --- verbs ---------------------------------------------------------------------

def cmd_compare(args) -> int:
    u, v = _pair(args.u, args.v)
    ok = weak.leq(u, v)
    gap = length(v) - length(u) if ok else None
    if args.json:
        print(json.dumps({"leq": ok, "length_gap": gap}, sort_keys=True))
    elif ok:
        print(f"true (length gap {gap})")
    else:
        print("false")
    return 0 if ok else 1


def cmd_covers(args) -> int:
    u = _perm(args.u)
    check_rank(len(u))
    found = weak.lower_covers(u) if args.down else weak.covers(u)
    for w in sorted(found, key=lambda w: (length(w), w)):
        print(render(w))
    return 0


def cmd_meet(args) -> int:
    u, v = _pair(args.u, args.v)
    print(render(weak.meet(u, v)))
    return 0


def cmd_join(args) -> int:
    u, v = _pair(args.u, args.v)
    print(render(weak.join(u, v)))
    return 0


def cmd_mobius(args) -> int:
    u, v = _pair(args.u, args.v)
    check_rank(len(u))
    print(weak.mobius_from(u).get(v, 0))
    return 0


def cmd_interval(args) -> int:
    u, v = _pair(args.u, args.v)
    check_rank(len(u))
    members = sorted(weak.interval(u, v), key=lambda w: (length(w), w))
    if args.count:
        print(len(members))
    else:
        for w in members:
            print(render(w))
    return 0 if members else 1


def cmd_hasse(args) -> int:
    g = weak.build_cover_graph(args.n)
    if args.dot:
        sys.stdout.write(g.to_dot())
    else:
        print(f"B{args.n}: {len(g)} vertices, {g.edge_count} edges, height {g.height}")
    return 0


def _subset(text: str, n: int | None) -> tuple[list[int], int]:
    m = re.match(r"^\s*(.*?)\s*@\s*(\d+)\s*$", text)
    if m:
        text, n = m.group(1), int(m.group(2))
    if n is None:
        raise UsageError("give the size with --n N or the form {0,2}@4")
    return _int_list(text, "subset"), n


def cmd_zeta(args) -> int:
    subset, n = _subset(args.subset, args.n)
    try:
        print(render(weak.descent_class_max(subset, n)))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return 0


def _blocks(text: str) -> tuple[int, ...]:
    blocks = tuple(_int_list(text, "block sizes"))
    if len(blocks) < 2 or any(b < 1 for b in blocks):
        raise UsageError(f"need at least two positive block sizes, got {text!r}")
    return blocks


def cmd_components(args) -> int:
    blocks = _blocks(args.blocks)
    check_rank(sum(blocks))
    if args.check == "partition":
        ok = embeddings.partition_check(*blocks)
        print("true" if ok else "false")
        return 0 if ok else 1
    if args.check == "gap":
        gap = embeddings.gap_check(*blocks)
        witness = embeddings.gap_witness(*blocks)
        if gap is None:
            print("none")
            return 1
        print(f"{gap} ({render(witness[0])} < {render(witness[1])})")
        return 0
    for sig in embeddings.signatures(blocks):
        lo, hi = embeddings.component_interval(sig)
        print(f"{sig}: [{render(lo)}; {render(hi)}]")
        if args.list:
            for xi in shuffle_perms(*blocks):
                image = embeddings.component_members(sig, xi)
                a = min(image, key=length)
                b = max(image, key=length)
                print(f"  xi={render(xi)}: [{render(a)}; {render(b)}]")
    return 0


def cmd_factorize(args) -> int:
    w = _perm(args.w)
    if not 0 <= args.p <= len(w):
        raise UsageError(f"split point {args.p} outside [0, {len(w)}]")
    f = embeddings.factorize(w, args.p)
    print(f"xi={render(f.xi.perm)} left={render(f.left)} right={render(f.right)}")
    return 0


def cmd_product(args) -> int:
    x, y = _sum(args.x, args.basis), _sum(args.y, args.basis)
    if x.basis != y.basis:
        raise UsageError(f"basis mismatch: {x.basis} vs {y.basis}")
    _emit(hsym.product(x, y), args.json)
    return 0


def cmd_coproduct(args) -> int:
    _emit(hsym.coproduct(_sum(args.x, args.basis)), args.json)
    return 0


def cmd_convert(args) -> int:
    _emit(hsym.convert(_sum(args.x, args.basis), args.to), args.json)
    return 0


def cmd_descent_map(args) -> int:
    _emit(bqsym.descent_map(_sum(args.x, args.basis)), args.json)
    return 0


def cmd_verify(args) -> int:
    if args.list:
        for name, suite in SUITES.items():
            print(f"{name}: {suite.description}")
        return 0
    if args.suite == "all":
        names = list(SUITES)
    elif args.suite in SUITES:
        names = [args.suite]
    else:
        raise UsageError(f"unknown suite {args.suite!r}; see `verify --list`")
    max_n = args.max_n if args.max_n is not None else 4
    reports = [run_suite(name, max_n) for name in names]
    if args.json:
        print(json.dumps([
            {"suite": r.suite, "attempted": r.attempted, "passed": r.passed,
             "counterexample": r.counterexample, "skipped": r.skipped}
            for r in reports
        ], sort_keys=True))
    else:
        for r in reports:
            print(r.line())
        failures = sum(1 for r in reports if not r.ok)
        print(f"{len(reports) - failures}/{len(reports)} suites passed")
    return 0 if all(r.ok for r in reports) else 1


# --- parser ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-n", type=int, default=None, help="rank cap (default: $OCTAWEAK_MAX_N or 6)")
    common.add_argument("--json", action="store_true", help="machine-readable output (sums, compare, verify)")
    common.add_argument("--basis", choices=("F", "M"), default="F", help="basis of permutation arguments")

    parser = _Parser(prog="octaweak", description="Weak order on signed permutations and its Hopf algebra.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def verb(name, func, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=func)
        return p

    for name, func, text in (
        ("compare", cmd_compare, "is U <= V in the weak order"),
        ("meet", cmd_meet, "greatest lower bound"),
        ("join", cmd_join, "least upper bound"),
        ("mobius", cmd_mobius, "Moebius function mu(U, V)"),
    ):
        p = verb(name, func, text)
        p.add_argument("u")
        p.add_argument("v")

    p = verb("interval", cmd_interval, "elements between U and V")
    p.add_argument("u")
    p.add_argument("v")
    p.add_argument("--count", action="store_true")

    p = verb("covers", cmd_covers, "upper (or lower) covers of U")
    p.add_argument("u")
    p.add_argument("--down", action="store_true")

    p = verb("hasse", cmd_hasse, "cover graph of B_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--dot", action="store_true")

    p = verb("zeta", cmd_zeta, "largest element with a given descent set")
    p.add_argument("subset", help="e.g. 0,2 or {0,2}@4")
    p.add_argument("--n", type=int, default=None)

    p = verb("components", cmd_components, "components of a shifted product of groups")
    p.add_argument("--blocks", required=True, help="block sizes, e.g. 1,2")
    p.add_argument("--list", action="store_true", help="also list each shuffle image")
    p.add_argument("--check", choices=("partition", "gap"))

    p = verb("factorize", cmd_factorize, "w = xi (u x v) with xi a shuffle")
    p.add_argument("w")
    p.add_argument("--p", type=int, required=True)

    p = verb("product", cmd_product, "product of two sums")
    p.add_argument("x")
    p.add_argument("y")

    p = verb("coproduct", cmd_coproduct, "coproduct of a sum")
    p.add_argument("x")

    p = verb("convert", cmd_convert, "change of basis")
    p.add_argument("x")
    p.add_argument("--to", choices=("F", "M"), required=True)

    p = verb("descent-map", cmd_descent_map, "image in type-B quasisymmetric functions")
    p.add_argument("x")

    p = verb("verify", cmd_verify, "run verification suites")
    p.add_argument("suite", nargs="?", default="all")
    p.add_argument("--list", action="store_true")
    return parser


def _protect_negatives(argv: Sequence[str]) -> list[str]:
    # argparse reads "-1,2" as an option; a leading space keeps it positional
    return [f" {a}" if _NEGATIVE_TOKEN.match(a) else a for a in argv]


def run(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_protect_negatives(argv))
        if args.max_n is not None and args.command != "verify":
            with rank_cap(args.max_n):
                return args.func(args)
        return args.func(args)
    except UsageError as exc:
        print(f"octaweak: error: {exc}", file=sys.stderr)
        return 2
    except RankCapError as exc:
        print(f"octaweak: error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ArithmeticError, OSError) as exc:
        print(f"octaweak: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
