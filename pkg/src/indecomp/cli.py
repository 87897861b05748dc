"""Command-line entry point: ``indecomp <verb> ...``.

Payloads go to stdout and human-readable notes to stderr. Exit codes are
0 for success, 1 for a failed check or a negative answer, 2 for usage and
parse errors and 3 when an input exceeds a capacity limit.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path

from .criticality import analyze
from .enumeration import CACHE_ENV, PREDICATES, enumerate_census, filter_census
from .errors import CapacityError, FalsificationError, IndecompError, ParseError
from .families import Family, gen
from .formats import WRITERS, dump_census, loads
from .morphisms import are_isomorphic, embeds
from .verify import CHECKS, run_all, run_check

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAPACITY = 0, 1, 2, 3


def _read(source: str):
    if source == "-":
        text = sys.stdin.read()
    else:
        try:
            text = Path(source).read_text()
        except OSError as exc:
            raise ParseError(f"cannot read {source}: {exc.strerror}") from exc
    return loads(text)


def _emit(payload: str, out: str | None = None) -> None:
    if out:
        Path(out).write_text(payload)
    else:
        sys.stdout.write(payload)


def _cache_dir(args) -> str | None:
    # The environment variable wins over the flag.
    return os.environ.get(CACHE_ENV) or args.cache_dir


def cmd_gen(args) -> int:
    T = gen(args.family, args.n)
    _emit(WRITERS[args.format](T), args.out)
    return EXIT_OK


def cmd_analyze(args) -> int:
    report = analyze(_read(args.input))
    _emit(json.dumps(report, indent=2) + "\n", args.out)
    return EXIT_OK


def cmd_iso(args) -> int:
    f = are_isomorphic(_read(args.a), _read(args.b))
    _emit(json.dumps({"isomorphic": f is not None, "map": None if f is None else list(f)}) + "\n")
    return EXIT_OK if f is not None else EXIT_FAIL


def cmd_embed(args) -> int:
    H, T = _read(args.h), _read(args.t)
    f = embeds(H, T) if H.n <= T.n else None
    witness = None if f is None else {str(k): v for k, v in f.items()}
    _emit(json.dumps({"embeds": f is not None, "map": witness}) + "\n")
    return EXIT_OK if f is not None else EXIT_FAIL


def cmd_enumerate(args) -> int:
    census = enumerate_census(args.n, _cache_dir(args), jobs=args.jobs)
    if args.filter:
        census = filter_census(census, args.filter)
    print(f"order {args.n}: {len(census)} classes", file=sys.stderr)
    _emit(dump_census(census.order, census.representatives), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    cache = _cache_dir(args)
    if args.check == "all":
        results = run_all(args.max_n, cache, jobs=args.jobs)
    else:
        results = [run_check(args.check, args.max_n, cache)]
    for r in results:
        flag = " (vacuous)" if r.vacuous else ""
        print(f"{r.status} {r.check_id}: {r.instances_checked} instances{flag}", file=sys.stderr)
    if args.json:
        _emit(json.dumps([r.to_dict() for r in results], indent=2) + "\n", args.out)
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="indecomp", description="Indecomposable tournaments toolkit.")
    parser.add_argument("--cache-dir", help=f"census cache directory (env {CACHE_ENV} takes precedence)")
    parser.add_argument("--jobs", type=int, default=os.cpu_count() or 1, help="worker processes")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="verb", required=True, metavar="verb")

    p = sub.add_parser("gen", help="generate a named family member")
    p.add_argument("family", help=f"one of {', '.join(f.value for f in Family)}")
    p.add_argument("--n", type=int, help="family parameter")
    p.add_argument("--format", choices=sorted(WRITERS), default="triangle")
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("analyze", help="report every computed attribute as JSON")
    p.add_argument("input", help="file path or - for stdin")
    p.add_argument("--out")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("iso", help="test two tournaments for isomorphism")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("embed", help="find H as an induced subtournament of T")
    p.add_argument("h")
    p.add_argument("t")
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("enumerate", help="write the census of one order")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--filter", choices=sorted(PREDICATES))
    p.add_argument("--out")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="run one named check or all of them")
    p.add_argument("check", choices=["all", *CHECKS], metavar="check", help="a check id or 'all'")
    p.add_argument("--max-n", type=int, default=7)
    p.add_argument("--json", action="store_true", help="write the report as JSON to stdout")
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr)
    try:
        return args.func(args)
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except FalsificationError as exc:
        print(f"falsified: {exc}", file=sys.stderr)
        print(json.dumps(exc.witness), file=sys.stdout)
        return EXIT_FAIL
    except IndecompError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
