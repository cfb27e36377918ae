"""
Command line entry point.

    braidnt classify --strands 3 1 -2
    braidnt nf --strands 3 1 -2
    braidnt slide --strands 3 1 2
    braidnt sss --strands 3 2 1 -2
    braidnt bench --strands 3 --lengths 128,256 --samples 20 --seed 1
    braidnt conjecture --strands 4 --lengths 10,20 --samples 5 --seed 1

Words are whitespace separated signed generator indices. ``BRAIDNT_STRANDS``
supplies a default for ``--strands``. Exit status: 0 ok, 2 bad word or flags,
3 bad strand count.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .bench import (
    BENCH_HEADER,
    CONJECTURE_HEADER,
    RunRecord,
    bench_rows,
    bench_slope,
    conjecture_rows,
    form_to_json,
    to_csv,
)
from .classify import Config, classify
from .errors import InvalidGenerator, InvalidStrandCount
from .normal_form import normal_form
from .simple import check_strands, parse_word
from .sliding import cyclic_sliding, parse_mode, sss_descent

EXIT_PARSE = 2
EXIT_STRANDS = 3


def _strands_default():
    env = os.environ.get("BRAIDNT_STRANDS")
    return int(env) if env else None


def _lengths(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad length list {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="braidnt", description="Garside normal forms and Nielsen-Thurston types of braids")
    sub = parser.add_subparsers(dest="command", required=True)

    def word_cmd(name, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("--strands", type=int, default=_strands_default())
        p.add_argument("word", nargs="*")
        return p

    p = word_cmd("classify", "Nielsen-Thurston type with certificate")
    p.add_argument("--mode", default="cycle-detect", help="cycle-detect or bounded:K")
    p.add_argument("--max-power", type=int, default=None)
    out = p.add_mutually_exclusive_group()
    out.add_argument("--json", dest="fmt", action="store_const", const="json", default="json")
    out.add_argument("--text", dest="fmt", action="store_const", const="text")

    word_cmd("nf", "left normal form")
    word_cmd("slide", "one cyclic sliding")
    word_cmd("sss", "super summit descent with conjugator")

    for name, help in (("bench", "runtime scaling CSV"), ("conjecture", "sliding-circuit entry times CSV")):
        p = sub.add_parser(name, help=help)
        p.add_argument("--strands", type=int, default=_strands_default())
        p.add_argument("--lengths", type=_lengths, required=True)
        p.add_argument("--samples", type=int, default=20)
        p.add_argument("--seed", type=int, default=0)
        if name == "bench":
            p.add_argument("--max-power", type=int, default=None)
    return parser


def _nf_json(x) -> dict:
    return {
        "n": x.n,
        **form_to_json(x),
        "inf": x.inf,
        "sup": x.sup,
        "canonical_length": x.canonical_length,
        "braid_length": x.braid_length,
        "word": list(x.to_word().letters),
    }


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.strands is None:
        parser.error("--strands is required")
    try:
        n = check_strands(args.strands)
    except InvalidStrandCount as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_STRANDS

    if args.command in ("bench", "conjecture"):
        if args.samples < 0:
            parser.error("--samples must be non-negative")
        if args.command == "bench":
            rows = bench_rows(n, args.lengths, args.samples, args.seed, Config(max_power=args.max_power))
            sys.stdout.write(to_csv(BENCH_HEADER, rows))
            print(f"log-log slope of time vs |x|: {bench_slope(rows)}", file=sys.stderr)
        else:
            rows = conjecture_rows(n, args.lengths, args.samples, args.seed)
            sys.stdout.write(to_csv(CONJECTURE_HEADER, rows))
        return 0

    try:
        w = parse_word(n, args.word)
    except InvalidGenerator as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE

    x = normal_form(w)
    if args.command == "classify":
        try:
            cfg = Config(mode=parse_mode(args.mode), max_power=args.max_power)
        except ValueError as e:
            print(f"error: {e}", file=sys.stderr)
            return EXIT_PARSE
        record = RunRecord.from_classification(w, classify(x, cfg))
        if args.fmt == "text":
            print(record.kind)
            for k, v in record.to_dict().items():
                if k not in ("kind", "n", "word"):
                    print(f"  {k}: {v}")
        else:
            print(record.to_json())
    elif args.command == "nf":
        print(json.dumps(_nf_json(x)))
    elif args.command == "slide":
        y, t = cyclic_sliding(x)
        print(json.dumps({"element": _nf_json(y), "prefix": list(t.perm), "prefix_word": t.word()}))
    elif args.command == "sss":
        y, c = sss_descent(x)
        print(json.dumps({"element": _nf_json(y), "conjugator": _nf_json(c)}))
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
