"""Command-line front end.

Subcommands: analyze (per-permutation report), tree (block
decomposition), interval (weak-order interval data), verify
(exhaustive identity suites), survey (full S_n scans), bijection
(pairing tooling).  Human output is aligned text; --json switches
every subcommand to JSON.  Exit codes: 0 success, 1 domain error,
2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from math import factorial

from .bijection import build_pair_table, check_bijection, invert_phi
from .errors import (
    CheckpointError,
    GuardExceeded,
    IncomparableEndpoints,
    InternalInversionFailure,
    NonzeroRemainder,
    Not231Avoiding,
    NotSeparable,
)
from .perm import Permutation, identity, longest_element, parse_permutation
from .poset import inversion_poset, le_gf
from .qpoly import IntPoly, is_cyclotomic_product, q_factorial
from .separable import (
    Leaf,
    gf_above_recursive,
    gf_below_recursive,
    is_separable,
    separating_tree,
    tree_dot,
    tree_json,
)
from .survey import MODES, default_workers, report_json, scan
from .verify import run_suite, suite_names
from .weak_order import hasse_dot, interval, interval_json, rank_gf


class UsageError(Exception):
    pass


def _parse_perm(text: str) -> Permutation:
    try:
        return parse_permutation(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _print_aligned(rows: list[tuple[str, str]]) -> None:
    width = max(len(k) for k, _ in rows)
    for key, value in rows:
        print(f"{key.ljust(width)}  {value}")


def _emit(args, data: dict, rows: list[tuple[str, str]]) -> None:
    if args.json:
        print(json.dumps(data, indent=2))
    else:
        _print_aligned(rows)


def _write_text(path: str, text: str) -> None:
    tmp = path + ".tmp"
    with open(tmp, "w") as fh:
        fh.write(text)
    os.replace(tmp, path)


def _bool(b: bool) -> str:
    return "true" if b else "false"


def _memory_note(n: int) -> None:
    # rough peak: one Python object row per permutation
    mb = factorial(n) * 150 / 1e6
    print(f"guard override active; memory estimate ~{max(1, round(mb))} MB", file=sys.stderr)


def _gf_pair(pi: Permutation, force: bool) -> tuple[IntPoly, IntPoly]:
    if is_separable(pi):
        return gf_below_recursive(pi), gf_above_recursive(pi)
    below = le_gf(inversion_poset(pi), force=force)
    above = le_gf(inversion_poset(pi.complement()), force=force).reverse()
    return below, above


def _cmd_analyze(args) -> int:
    pi = _parse_perm(args.perm)
    if args.force:
        _memory_note(pi.size)
    below, above = _gf_pair(pi, args.force)
    sep = is_separable(pi)
    product = below * above == q_factorial(pi.size)
    data = {
        "word": str(pi),
        "length": pi.length,
        "descents": sorted(pi.descent_set()),
        "separable": sep,
        "gf_below": str(below),
        "gf_above": str(above),
        "product_is_qfactorial": product,
        "rank_symmetric": below.is_symmetric(),
        "unimodal": below.is_unimodal(),
        "cyclotomic_product": is_cyclotomic_product(below),
    }
    rows = [
        ("word", data["word"]),
        ("length", str(data["length"])),
        ("descents", ", ".join(str(d) for d in data["descents"]) or "-"),
        ("separable", _bool(sep)),
        ("gf_below", data["gf_below"]),
        ("gf_above", data["gf_above"]),
        ("product_is_qfactorial", _bool(product)),
        ("rank_symmetric", _bool(data["rank_symmetric"])),
        ("unimodal", _bool(data["unimodal"])),
        ("cyclotomic_product", _bool(data["cyclotomic_product"])),
    ]
    _emit(args, data, rows)
    return 0


def _tree_text(node, depth: int = 0) -> list[str]:
    pad = "  " * depth
    if isinstance(node, Leaf):
        return [f"{pad}leaf {node.value}"]
    lines = [f"{pad}{node.sign}"]
    lines.extend(_tree_text(node.left, depth + 1))
    lines.extend(_tree_text(node.right, depth + 1))
    return lines


def _cmd_tree(args) -> int:
    pi = _parse_perm(args.perm)
    tree = separating_tree(pi)
    if args.dot:
        text = tree_dot(tree)
    elif args.json:
        text = json.dumps(tree_json(tree), indent=2)
    else:
        text = "\n".join(_tree_text(tree.root))
    if args.out:
        _write_text(args.out, text + "\n")
    else:
        print(text)
    return 0


def _cmd_interval(args) -> int:
    pi = _parse_perm(args.perm)
    if args.force:
        _memory_note(pi.size)
    if args.side == "below":
        iv = interval(identity(pi.size), pi, force=args.force)
    else:
        iv = interval(pi, longest_element(pi.size), force=args.force)
    if args.gf:
        text = str(rank_gf(iv))
    elif args.dot:
        text = hasse_dot(iv)
    elif args.json:
        text = json.dumps(interval_json(iv), indent=2)
    else:
        rows = [
            ("bottom", str(iv.bottom)),
            ("top", str(iv.top)),
            ("size", str(iv.size)),
            ("rank sizes", ", ".join(str(len(r)) for r in iv.ranks)),
            ("rank gf", str(rank_gf(iv))),
        ]
        _print_aligned(rows)
        return 0
    if args.out:
        _write_text(args.out, text + "\n")
    else:
        print(text)
    return 0


def _cmd_verify(args) -> int:
    result = run_suite(args.suite, n=args.n, force=args.force)
    if args.json:
        data = {
            "suite": result.suite,
            "passed": result.passed,
            "checks": [
                {"label": c.label, "passed": c.passed, "detail": c.detail}
                for c in result.checks
            ],
        }
        print(json.dumps(data, indent=2))
    else:
        print(f"suite {result.suite}")
        for c in result.checks:
            tag = "pass" if c.passed else "FAIL"
            detail = f" ({c.detail})" if c.detail else ""
            print(f"{tag}: {c.label}{detail}")
    return 0 if result.passed else 1


def _cmd_survey(args) -> int:
    if args.force:
        _memory_note(args.n)
    workers = args.workers if args.workers is not None else default_workers()
    report = scan(
        args.n,
        mode=args.mode,
        out=args.out,
        resume=args.resume,
        workers=workers,
        force=args.force,
    )
    data = report_json(report)
    rows = [(key, str(value)) for key, value in data.items()]
    _emit(args, data, rows)
    return 0


def _cmd_bijection(args) -> int:
    pi = _parse_perm(args.perm)
    if args.force:
        _memory_note(pi.size)
    if args.invert is not None:
        w = _parse_perm(args.invert)
        u, v = invert_phi(pi, w)
        _emit(
            args,
            {"word": str(pi), "target": str(w), "u": str(u), "v": str(v)},
            [("u", str(u)), ("v", str(v))],
        )
        return 0
    if args.table:
        table = build_pair_table(pi, force=args.force)
        text = table.to_csv()
        if args.out:
            _write_text(args.out, text)
        else:
            print(text, end="")
        return 0
    report = check_bijection(pi, force=args.force)
    data = {
        "word": str(pi),
        "separable": is_separable(pi),
        "is_bijection": report.is_bijection,
        "collisions": [
            {"image": str(w), "pairs": [[str(u), str(v)] for u, v in pairs]}
            for w, pairs in report.collisions
        ],
    }
    rows = [
        ("word", str(pi)),
        ("separable", _bool(data["separable"])),
        ("is_bijection", _bool(report.is_bijection)),
        ("collisions", str(len(report.collisions))),
    ]
    _emit(args, data, rows)
    return 0


def _parser() -> argparse.ArgumentParser:
    # --json/--force are accepted before or after the subcommand; the
    # SUPPRESS defaults keep the subparser from clobbering a value the
    # top-level parse already set
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--json",
        action="store_true",
        default=argparse.SUPPRESS,
        help="emit JSON instead of text",
    )
    common.add_argument(
        "--force",
        action="store_true",
        default=argparse.SUPPRESS,
        help="override size guards (prints a memory estimate)",
    )
    top = argparse.ArgumentParser(
        prog="weakbruhat",
        description="Weak-order interval generating functions for permutations.",
        parents=[common],
    )
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full report for one permutation", parents=[common])
    p.add_argument("perm")
    p.set_defaults(handler=_cmd_analyze)

    p = sub.add_parser("tree", help="block decomposition of a separable permutation", parents=[common])
    p.add_argument("perm")
    p.add_argument("--dot", action="store_true", help="emit DOT")
    p.add_argument("--out", help="write to a file instead of stdout")
    p.set_defaults(handler=_cmd_tree)

    p = sub.add_parser("interval", help="weak-order interval below or above a permutation", parents=[common])
    p.add_argument("perm")
    p.add_argument("--side", choices=("below", "above"), default="below")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--gf", action="store_true", help="print the rank generating function")
    group.add_argument("--dot", action="store_true", help="emit the Hasse diagram as DOT")
    p.add_argument("--out", help="write to a file instead of stdout")
    p.set_defaults(handler=_cmd_interval)

    p = sub.add_parser("verify", help="run an exhaustive verification suite", parents=[common])
    p.add_argument("suite", choices=suite_names())
    p.add_argument("--n", type=int, default=None, help="override the suite's size range")
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("survey", help="scan all of S_n and aggregate predicates", parents=[common])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", help="stream per-permutation records to a CSV")
    p.add_argument("--resume", action="store_true", help="continue from a checkpoint")
    p.add_argument("--mode", choices=MODES, default="formula-accelerated")
    p.add_argument("--workers", type=int, default=None, help="process count (default: cpu count capped by BRUHAT_THREADS)")
    p.set_defaults(handler=_cmd_survey)

    p = sub.add_parser("bijection", help="pairing of lower and upper interval elements", parents=[common])
    p.add_argument("perm")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--check", action="store_true", help="test bijectivity (default)")
    group.add_argument("--invert", metavar="W", help="recover the pair mapping to W")
    group.add_argument("--table", action="store_true", help="emit the full pair table as CSV")
    p.add_argument("--out", help="write the table to a file instead of stdout")
    p.set_defaults(handler=_cmd_bijection)

    return top


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    args.json = getattr(args, "json", False)
    args.force = getattr(args, "force", False)
    try:
        return args.handler(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (
        NotSeparable,
        Not231Avoiding,
        GuardExceeded,
        IncomparableEndpoints,
        NonzeroRemainder,
        InternalInversionFailure,
        CheckpointError,
        ValueError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
