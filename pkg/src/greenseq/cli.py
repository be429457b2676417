"""Command line interface: ``greenseq <subcommand> --preset NAME | --quiver FILE``."""

from __future__ import annotations

import argparse
import ast
import json
import logging
import sys
import time
from pathlib import Path

from . import __version__
from .catalog import build_catalog
from .errors import (
    InternalInvariantError,
    MismatchFound,
    QuiverError,
    TooManyOrientations,
    UnsupportedQuiver,
)
from .hasse import build_hasse, emit_dot, prune_to_finite
from .oracle import enumerate_mgs
from .pipeline import report, run_all_orientations, run_oracle_check, run_pipeline
from .prec import build_prec_table, explain
from .quiver import PRESET_NAMES, Quiver, preset

EXIT_OK, EXIT_MISMATCH, EXIT_BAD_INPUT, EXIT_UNSUPPORTED, EXIT_INTERNAL = 0, 1, 2, 3, 4


def load_quiver(args) -> Quiver:
    if bool(args.quiver) == bool(args.preset):
        raise QuiverError("give exactly one of --quiver and --preset")
    if args.preset:
        return preset(args.preset)
    try:
        data = json.loads(Path(args.quiver).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise QuiverError(f"cannot read quiver file: {exc}") from None
    return Quiver.from_json(data)


def _parse_triple(text: str) -> tuple[int, int, int]:
    try:
        t = tuple(int(x) for x in ast.literal_eval(text))
    except (ValueError, SyntaxError, TypeError):
        raise QuiverError(f"cannot parse triple {text!r}") from None
    if len(t) != 3:
        raise QuiverError(f"triple {text!r} must have three entries")
    return t


def _write(args, text: str) -> None:
    if getattr(args, "out", None):
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def _distribution_text(counts: dict, fmt: str, payload: dict) -> str:
    if fmt == "tsv":
        return "".join(f"{k}\t{v}\n" for k, v in sorted(counts.items()))
    return json.dumps(payload, indent=2) + "\n"


def cmd_count(args) -> int:
    res = run_pipeline(load_quiver(args), debug=args.debug)
    rep = report(res)
    _write(args, _distribution_text(res.distribution.counts, args.format, rep))
    if args.stats:
        print(json.dumps({"timings": res.timings, "hasse_before_pruning": res.hasse_raw}),
              file=sys.stderr)
    return EXIT_OK


def cmd_hasse(args) -> int:
    t = time.perf_counter()
    cat = build_catalog(load_quiver(args))
    H = prune_to_finite(build_hasse(cat, build_prec_table(cat)))
    if args.emit_dot:
        Path(args.emit_dot).write_text(emit_dot(H))
    if args.format == "dot":
        _write(args, emit_dot(H))
    else:
        _write(args, json.dumps(H.stats()) + "\n")
    if args.stats:
        print(json.dumps({"seconds": time.perf_counter() - t}), file=sys.stderr)
    return EXIT_OK


def cmd_catalog(args) -> int:
    cat = build_catalog(load_quiver(args))
    _write(args, json.dumps(cat.to_json(), indent=1) + "\n")
    return EXIT_OK


def cmd_prec(args) -> int:
    cat = build_catalog(load_quiver(args))
    X, Y = _parse_triple(args.x), _parse_triple(args.y)
    for t in (X, Y):
        if t not in cat.index:
            raise QuiverError(f"{t} is not in the catalog")
    value, branch = explain(X, Y, cat)
    _write(args, json.dumps({"x": list(X), "y": list(Y), "prec": value, "branch": branch}) + "\n")
    return EXIT_OK


def cmd_oracle(args) -> int:
    dist = enumerate_mgs(load_quiver(args), args.max_len)
    payload = {
        "max_len": args.max_len,
        "counts": {str(k): str(v) for k, v in dist.counts.items()},
        "total": str(dist.total),
    }
    _write(args, _distribution_text(dist.counts, args.format, payload))
    return EXIT_OK


def cmd_orientations(args) -> int:
    out = run_all_orientations(load_quiver(args), args.max_edges, args.threads)
    _write(args, json.dumps(out, indent=1) + "\n")
    return EXIT_OK


def cmd_check(args) -> int:
    out = run_oracle_check(load_quiver(args), args.max_len)
    _write(args, json.dumps(out) + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    src = common.add_argument_group("input")
    src.add_argument("--quiver", metavar="FILE", help="quiver JSON file")
    src.add_argument("--preset", metavar="NAME",
                     help="preset quiver: " + ", ".join(PRESET_NAMES))
    common.add_argument("--format", choices=("json", "tsv", "dot"), default="json")
    common.add_argument("--out", metavar="PATH", help="write output here instead of stdout")
    common.add_argument("--threads", type=int, default=1,
                        help="worker processes (results do not depend on this)")
    common.add_argument("--stats", action="store_true", help="timings on stderr")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="greenseq", description=__doc__)
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", parents=[common], help="count maximal green sequences by length")
    p.add_argument("--debug", action="store_true", help="re-check every Hasse vertex")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("hasse", parents=[common], help="size of the finite Hasse quiver")
    p.add_argument("--emit-dot", metavar="PATH")
    p.set_defaults(func=cmd_hasse)

    p = sub.add_parser("catalog", parents=[common], help="dump the candidate catalog")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("prec", parents=[common], help="decide X < Y for two catalog triples")
    p.add_argument("--x", required=True, metavar="(a,b,c)")
    p.add_argument("--y", required=True, metavar="(a,b,c)")
    p.set_defaults(func=cmd_prec)

    p = sub.add_parser("oracle", parents=[common], help="brute-force framed-quiver enumeration")
    p.add_argument("--max-len", type=int, required=True)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("orientations", parents=[common], help="maximal length over all orientations")
    p.add_argument("--max-edges", type=int, default=12)
    p.set_defaults(func=cmd_orientations)

    p = sub.add_parser("check", parents=[common], help="cross-check against the oracle")
    p.add_argument("--max-len", type=int, default=None)
    p.set_defaults(func=cmd_check)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except UnsupportedQuiver as exc:
        print(f"greenseq: unsupported quiver: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except (QuiverError, TooManyOrientations) as exc:
        print(f"greenseq: bad input: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except MismatchFound as exc:
        print(f"greenseq: oracle mismatch: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except InternalInvariantError as exc:
        print(f"greenseq: internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
