"""Command line interface.

Exit codes: 0 success, 2 parse error, 3 semantic error (degree or
membership), 4 internal assertion.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from . import bench
from .cupi import delta_i_simplex
from .f2linear import betti_numbers, rank
from .formats import ParseError, cochain_to_json, format_complex, read_cochain, read_complex
from .simplicial import as_simplex
from .spaces import SPACES, get_space
from .steenrod import METHODS, sq_matrix

EXIT_PARSE, EXIT_SEMANTIC, EXIT_INTERNAL = 2, 3, 4


class SemanticError(ValueError):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _load_complex(path):
    try:
        return read_complex(path)
    except OSError as e:
        raise ParseError(str(e)) from None


def cmd_cohomology(args) -> str:
    X = _load_complex(args.complex)
    return _dump({"betti": betti_numbers(X)})


def cmd_delta(args) -> str:
    try:
        x = as_simplex(int(v) for v in args.simplex.split(","))
    except ValueError as e:
        raise ParseError(f"bad simplex {args.simplex!r}: {e}") from None
    pairs = sorted(delta_i_simplex(x, args.i))
    return _dump([[list(a), list(b)] for a, b in pairs])


def cmd_sq(args) -> str:
    X = _load_complex(args.complex)
    try:
        alpha = read_cochain(args.cochain)
    except OSError as e:
        raise ParseError(str(e)) from None
    missing = [s for s in alpha.support if s not in X]
    if missing:
        raise SemanticError(f"simplex {list(missing[0])} is not in the complex")
    beta = METHODS[args.method](alpha, args.k, X)
    other = METHODS["direct" if args.method == "fast" else "fast"](alpha, args.k, X)
    if beta != other:
        raise AssertionError("fast and direct methods disagree")
    return _dump(cochain_to_json(beta))


def cmd_sq_matrix(args) -> str:
    X = _load_complex(args.complex)
    if args.n < 0:
        raise SemanticError("degree must be nonnegative")
    M = sq_matrix(X, args.n, args.k)
    return _dump({"rank": rank(M), "matrix": M.to_dense()})


def cmd_bench(args) -> str | None:
    rows = bench.run_suspension_benchmark(args.max_susp, args.repeats)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            bench.write_csv(rows, fh)
        return None
    bench.write_csv(rows, sys.stdout)
    return None


def cmd_export_space(args) -> str:
    try:
        space = get_space(args.name)
    except KeyError as e:
        raise SemanticError(e.args[0]) from None
    betti = " ".join(map(str, space.expected_betti))
    return format_complex(space.complex, f"{space.name}, F2 Betti numbers {betti}").rstrip("\n")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cupsq", description="Cup-i products and Steenrod squares over F2")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cohomology", help="F2 Betti numbers of a complex")
    p.add_argument("-c", "--complex", required=True)
    p.set_defaults(func=cmd_cohomology)

    p = sub.add_parser("delta", help="cup-i coproduct of a simplex")
    p.add_argument("-s", "--simplex", required=True, help='ascending vertices, e.g. "0,1,2"')
    p.add_argument("-i", type=int, required=True)
    p.set_defaults(func=cmd_delta)

    p = sub.add_parser("sq", help="Steenrod square of a cochain")
    p.add_argument("-c", "--complex", required=True)
    p.add_argument("-a", "--cochain", required=True)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--method", choices=sorted(METHODS), default="fast")
    p.set_defaults(func=cmd_sq)

    p = sub.add_parser("sq-matrix", help="matrix of Sq^k: H^n -> H^(n+k)")
    p.add_argument("-c", "--complex", required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-k", type=int, required=True)
    p.set_defaults(func=cmd_sq_matrix)

    p = sub.add_parser("bench", help="time Sq^1 on suspensions of RP^2 (CSV)")
    p.add_argument("--max-susp", type=int, default=6)
    p.add_argument("--repeats", type=int, default=1000)
    p.add_argument("--out")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("export-space", help="print a built-in space in complex text format")
    p.add_argument("name", help=f"one of {', '.join(sorted(SPACES))}, or susp<i>_<name>")
    p.set_defaults(func=cmd_export_space)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        out = args.func(args)
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except (SemanticError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_SEMANTIC
    except AssertionError as e:
        print(f"internal error: {e}", file=sys.stderr)
        return EXIT_INTERNAL
    if out is not None:
        print(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
