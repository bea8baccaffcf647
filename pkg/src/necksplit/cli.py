"""Command line interface.

Structured JSON goes to stdout, one-line human summaries to stderr (unless
``--quiet``). Exit codes: 0 success, 1 malformed input, 2 negative result
(certificate, false verdict, invalid splitting), 3 instance too large,
4 internal inconsistency.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from . import necklace as nkmod
from . import walkgraph
from .errors import MalformedInput, NecksplitError, InstanceTooLarge
from .generator import random_necklace, random_separable_necklace
from .maxcut import LIMIT_ENV, max_cut_exact
from .necklace import parse_necklace, separability_witness
from .oracle import enumerate_solutions
from .separability import decide_separability
from .splitter import NotSeparableCertificate, solve, splitting_from_document, verify_splitting

EXIT_OK, EXIT_NEGATIVE = 0, 2


class _Output:
    def __init__(self, quiet: bool):
        self.quiet = quiet

    def doc(self, obj) -> None:
        sys.stdout.write(json.dumps(obj, indent=2) + "\n")

    def text(self, s: str) -> None:
        sys.stdout.write(s)

    def note(self, msg: str) -> None:
        if not self.quiet:
            print(msg, file=sys.stderr)


def _read(path: str) -> str:
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise MalformedInput(f"cannot read {path}: {exc}") from exc


def _load(path: str):
    return parse_necklace(_read(path))


def cmd_solve(args, out: _Output) -> int:
    nk = _load(args.file)
    result = solve(nk, args.ell)
    if isinstance(result, NotSeparableCertificate):
        out.doc(result.to_document())
        out.note(f"not {nk.n - 1 + args.ell}-separable: reductions got stuck with {result.n} colors left")
        return EXIT_NEGATIVE
    report = verify_splitting(nk, result)
    out.doc({
        "splits": result.to_document(),
        "balance": report.to_document(),
        "diagnostics": result.diagnostics,
    })
    out.note(f"{nk.n} split points, balanced: {report.valid}")
    return EXIT_OK


def cmd_sep(args, out: _Output) -> int:
    nk = _load(args.file)
    try:
        k, witness = separability_witness(nk)
        method = "definition"
    except InstanceTooLarge:
        k, cut = max_cut_exact(walkgraph.build_walk_graph(nk))
        witness, method = cut.side, "walk-graph max-cut"
    out.doc({"sep": k, "witness": sorted(witness), "n": nk.n, "method": method})
    out.note(f"sep = {k} (n - 1 = {nk.n - 1}), witness {sorted(witness)}")
    return EXIT_OK


def cmd_check_sep(args, out: _Output) -> int:
    nk = _load(args.file)
    verdict = decide_separability(walkgraph.build_walk_graph(nk), args.ell, args.interval_rule)
    out.doc(verdict.to_document())
    out.note(f"{nk.n - 1 + args.ell}-separable: {verdict.decision} ({verdict.fired_check.value})")
    return EXIT_OK if verdict.decision else EXIT_NEGATIVE


def cmd_oracle(args, out: _Output) -> int:
    nk = _load(args.file)
    solutions = enumerate_solutions(nk)
    out.doc({"count": len(solutions), "solutions": [s.to_document() for s in solutions]})
    out.note(f"{len(solutions)} solution(s)")
    return EXIT_OK


def cmd_verify(args, out: _Output) -> int:
    nk = _load(args.file)
    try:
        doc = json.loads(_read(args.splits))
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"splits document is not JSON: {exc}") from exc
    report = verify_splitting(nk, splitting_from_document(doc))
    out.doc(report.to_document())
    out.note("valid splitting" if report.valid else "splitting is NOT balanced")
    return EXIT_OK if report.valid else EXIT_NEGATIVE


def cmd_gen(args, out: _Output) -> int:
    if args.ell is None:
        nk = random_necklace(args.colors, args.max_points, args.seed)
    else:
        nk = random_separable_necklace(args.colors, args.ell, args.seed, args.budget, args.max_points)
        if nk is None:
            out.note(f"no {args.colors - 1 + args.ell}-separable necklace within {args.budget} draws")
            return EXIT_NEGATIVE
    out.doc(nkmod.to_document(nk))
    return EXIT_OK


def cmd_graph(args, out: _Output) -> int:
    g = walkgraph.build_walk_graph(_load(args.file))
    if args.dot:
        out.text(walkgraph.to_dot(g))
    else:
        out.doc(walkgraph.to_document(g))
    out.note(f"{len(g.vertices)} vertices, {g.edge_count} edges")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="necksplit",
        description="Two-thief necklace splitting on (n-1+ell)-separable necklaces.",
        epilog=f"{LIMIT_ENV} sets the max-cut core size limit (default 28).",
    )
    parser.add_argument("-q", "--quiet", action="store_true", help="no summaries on stderr")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_file(name, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("file", help="instance document or compact string file ('-' for stdin)")
        return p

    p = with_file("solve", "find the splitting")
    p.add_argument("--ell", type=int, default=1)
    p.set_defaults(func=cmd_solve)

    with_file("sep", "exact separability with a witness subset").set_defaults(func=cmd_sep)

    p = with_file("check-sep", "decide (n-1+ell)-separability")
    p.add_argument("--ell", type=int, default=1)
    p.add_argument("--interval-rule", choices=("cut", "literal"), default="cut")
    p.set_defaults(func=cmd_check_sep)

    with_file("oracle", "enumerate all splittings by brute force").set_defaults(func=cmd_oracle)

    p = with_file("verify", "check a splitting")
    p.add_argument("--splits", required=True, help="JSON splits document (e.g. output of solve)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="generate a random instance")
    p.add_argument("--colors", type=int, required=True)
    p.add_argument("--max-points", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--ell", type=int, help="rejection-sample until (n-1+ell)-separable")
    p.add_argument("--budget", type=int, default=10_000)
    p.set_defaults(func=cmd_gen)

    p = with_file("graph", "walk graph as JSON or DOT")
    p.add_argument("--dot", action="store_true")
    p.set_defaults(func=cmd_graph)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, stream=sys.stderr)
    out = _Output(args.quiet)
    try:
        return args.func(args, out)
    except NecksplitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
