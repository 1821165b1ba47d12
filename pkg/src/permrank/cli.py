"""``permrank`` command line.

Exit codes: 0 success / realizable / verified, 1 not realizable or
mismatch, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from .exactmat import IntMatrix, MatrixFormatError, format_matrix, parse_matrix, pattern_of
from .graphcore import from_pattern, to_dot
from .oracles import EXHAUSTION_CAPS, FamilyUniverse, exhaustive_sequences
from .pprseq import PprSequence, SequenceFormatError, perrank, ppr_sequence
from .realizer import Family, classify, construct_witness, enumerate_realizable

DEFAULT_MAX_ORDER = 20

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


def _read_matrix(path: str) -> IntMatrix:
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path) as fh:
                text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return parse_matrix(text)
    except MatrixFormatError as exc:
        raise UsageError(str(exc)) from None


def _parse_sequence(text: str) -> PprSequence:
    try:
        return PprSequence.parse(text)
    except SequenceFormatError as exc:
        raise UsageError(str(exc)) from None


def cmd_compute(args, out) -> int:
    A = _read_matrix(args.matrix)
    if A.order > args.max_order:
        raise UsageError(f"matrix order {A.order} exceeds --max-order {args.max_order}")
    print(ppr_sequence(A), file=out)
    if args.perrank:
        print(perrank(A), file=out)
    return EXIT_OK


def cmd_check(args, out) -> int:
    seq = _parse_sequence(args.sequence)
    verdict = classify(seq, args.family)
    print(verdict, file=out)
    return EXIT_OK if verdict.realizable else EXIT_NEGATIVE


def cmd_realize(args, out) -> int:
    seq = _parse_sequence(args.sequence)
    verdict = classify(seq, args.family)
    if not verdict.realizable:
        print(verdict, file=out)
        return EXIT_NEGATIVE
    witness = construct_witness(seq, args.family)
    if args.verify:
        got = ppr_sequence(witness)
        if got != seq:
            print(f"roundtrip mismatch: expected {seq}, witness gives {got}", file=sys.stderr)
            return EXIT_NEGATIVE
    out.write(format_matrix(witness))
    if args.dot is not None:
        dot = to_dot(from_pattern(pattern_of(witness)))
        if args.dot == "-":
            out.write(dot)
        else:
            with open(args.dot, "w") as fh:
                fh.write(dot)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    seq = _parse_sequence(args.sequence)
    verdict = classify(seq, args.family)
    if not verdict.realizable:
        print(verdict, file=out)
        return EXIT_NEGATIVE
    got = ppr_sequence(construct_witness(seq, args.family))
    if got != seq:
        print(f"MISMATCH expected {seq} got {got}", file=out)
        return EXIT_NEGATIVE
    print("OK", file=out)
    return EXIT_OK


def cmd_enumerate(args, out) -> int:
    if args.n < 1:
        raise UsageError("--n must be at least 1")
    cap = args.max_order if args.max_order is not None else EXHAUSTION_CAPS[args.family]
    if args.exhaustive and args.n > cap:
        raise UsageError(f"--exhaustive is capped at n={cap} for {args.family.value} (raise with --max-order)")
    found = enumerate_realizable(args.n, args.family)
    for seq in found:
        print(seq, file=out)
    if not args.exhaustive:
        return EXIT_OK
    truth = exhaustive_sequences(FamilyUniverse(args.n, args.family, override_cap=True))
    if truth == set(found):
        print("MATCH", file=out)
        return EXIT_OK
    print(f"MISMATCH missing={sorted(map(str, truth - set(found)))} "
          f"extra={sorted(map(str, set(found) - truth))}", file=out)
    return EXIT_NEGATIVE


def _family(text: str) -> Family:
    try:
        return Family(text)
    except ValueError:
        names = ", ".join(f.value for f in Family)
        raise argparse.ArgumentTypeError(f"unknown family {text!r} (choose from {names})") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="permrank", description="Principal permanent rank sequences.")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("compute", help="ppr-sequence of a matrix file ('-' for stdin)")
    p.add_argument("matrix")
    p.add_argument("--perrank", action="store_true", help="also print the principal permanent rank")
    p.add_argument("--max-order", type=int, default=DEFAULT_MAX_ORDER)
    p.set_defaults(func=cmd_compute)

    for verb, func, text in (
        ("check", cmd_check, "decide realizability of a sequence"),
        ("realize", cmd_realize, "print a witness matrix for a sequence"),
        ("verify", cmd_verify, "classify, construct, recompute and compare"),
    ):
        p = sub.add_parser(verb, help=text)
        p.add_argument("sequence")
        p.add_argument("--family", type=_family, required=True)
        p.set_defaults(func=func)
        if verb == "realize":
            p.add_argument("--dot", nargs="?", const="-", default=None, metavar="PATH",
                           help="emit the witness graph as DOT (stdout, or PATH)")
            p.add_argument("--verify", action="store_true", help="recompute ppr before printing")

    p = sub.add_parser("enumerate", help="list all realizable sequences of order n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--family", type=_family, required=True)
    p.add_argument("--exhaustive", action="store_true", help="cross-check against brute force")
    p.add_argument("--max-order", type=int, default=None, help="override the exhaustion cap")
    p.set_defaults(func=cmd_enumerate)
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"permrank: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
