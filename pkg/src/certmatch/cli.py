"""Command-line interface: solve, check, oracle, gen.

Exit codes: 0 accept/success, 1 input error, 2 internal certification
failure, 3 checker reject, 4 capacity guard.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Optional

from . import formats
from .checker import check_max_card_matching
from .errors import CapacityError, CertificationError, InputError
from .graph import Graph
from .matcher import find_max_matching
from .oracle import brute_max_matching

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_CERTIFICATION = 2
EXIT_REJECT = 3
EXIT_CAPACITY = 4


def _read_file(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc


def _load_graph(path: str) -> Graph:
    return formats.parse_graph(_read_file(path))


def cmd_solve(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)

    on_event = None
    if args.trace:

        def on_event(e: tuple[int, int], kind: str) -> None:
            record = {"edge": list(e), "event": kind}
            print(json.dumps(record, sort_keys=True), file=sys.stderr)

    try:
        certified = find_max_matching(g, on_event=on_event)
    except CertificationError as exc:
        print(f"certification failure: {exc}", file=sys.stderr)
        return EXIT_CERTIFICATION
    doc = formats.result_document(
        g,
        [tuple(e) for e in certified.matching.edges],
        certified.witness,
        certified.verdict,
    )
    sys.stdout.write(doc)
    return EXIT_OK if certified.verdict.accepted else EXIT_CERTIFICATION


def cmd_check(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    matching, osc = formats.parse_certificate(_read_file(args.certificate))
    verdict = check_max_card_matching(g, matching, osc)
    if verdict.accepted:
        print("accept")
        return EXIT_OK
    print(f"reject: {verdict.reason}")
    return EXIT_REJECT


def cmd_oracle(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    best = brute_max_matching(g)
    print(len(best))
    return EXIT_OK


def cmd_gen(args: argparse.Namespace) -> int:
    if not 0.0 <= args.p <= 1.0:
        raise InputError(f"edge probability must lie in [0, 1], got {args.p}")
    if args.n < 0:
        raise InputError(f"vertex count must be nonnegative, got {args.n}")
    rng = random.Random(args.seed)
    edges = []
    for u in range(args.n):
        for v in range(u + 1, args.n):
            if rng.random() < args.p:
                edges.append((u, v))
    sys.stdout.write(formats.emit_dimacs(Graph(args.n, edges)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="certmatch",
        description="Certifying maximum-cardinality matching for general graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="compute a certified maximum matching")
    p_solve.add_argument("graph", help="graph file (DIMACS or bare edge list)")
    p_solve.add_argument(
        "--trace",
        action="store_true",
        help="stream search events as JSON lines on stderr",
    )
    p_solve.set_defaults(func=cmd_solve)

    p_check = sub.add_parser("check", help="verify a matching/cover certificate")
    p_check.add_argument("graph", help="graph file")
    p_check.add_argument("certificate", help="certificate JSON file")
    p_check.set_defaults(func=cmd_check)

    p_oracle = sub.add_parser("oracle", help="brute-force maximum matching size")
    p_oracle.add_argument("graph", help="graph file (small instances only)")
    p_oracle.set_defaults(func=cmd_oracle)

    p_gen = sub.add_parser("gen", help="generate a random G(n,p) instance")
    p_gen.add_argument("n", type=int, help="vertex count")
    p_gen.add_argument("p", type=float, help="edge probability")
    p_gen.add_argument("--seed", type=int, default=0, help="RNG seed")
    p_gen.set_defaults(func=cmd_gen)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CapacityError as exc:
        print(f"capacity guard: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def entry_point() -> None:
    raise SystemExit(main())
