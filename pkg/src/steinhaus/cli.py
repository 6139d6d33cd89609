"""Command-line entry point: ``steinhaus <subcommand> ...``.

Exit codes: 0 success, 2 input/parse error, 3 domain error (bounds,
non-triangular lengths), 4 internal cross-check failure.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import binomial, gensets, graph
from .errors import InternalMismatch, ParseError, TooLarge
from .gf2 import BitRow
from .triangle import from_left_side, from_right_side, from_top_row, triangular_number

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_DOMAIN = 3
EXIT_INTERNAL = 4

BOUND_ENV = "STEINHAUS_ENUM_BOUND"
BRUTE_FORCE_MAX_N = 5


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _bits(text: str) -> BitRow:
    try:
        return BitRow.from_string(text)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_INPUT) from exc


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}", EXIT_INPUT) from exc


def cmd_triangle(args, out) -> int:
    sources = [s for s in (args.seq, args.from_right, args.from_left) if s is not None]
    if len(sources) != 1:
        raise CliError("give exactly one of SEQ, --from-right, --from-left", EXIT_INPUT)
    if args.seq is not None:
        tri = from_top_row(_bits(args.seq))
    elif args.from_right is not None:
        tri = from_right_side(_bits(args.from_right))
    else:
        tri = from_left_side(_bits(args.from_left))
    for angle in args.rotate or []:
        tri = tri.rotate120() if angle == 120 else tri.rotate240()
    if args.reflect:
        tri = tri.reflect()
    if args.pretty:
        out.write(tri.pretty() + "\n")
    else:
        out.write(tri.to_text())
    return EXIT_OK


def _bound(args) -> int:
    if args.max_n is not None:
        return args.max_n
    env = os.environ.get(BOUND_ENV)
    if env:
        try:
            return int(env)
        except ValueError as exc:
            raise CliError(f"{BOUND_ENV} must be an integer", EXIT_INPUT) from exc
    return gensets.DEFAULT_ENUMERATION_BOUND


def cmd_gensets(args, out) -> int:
    try:
        sets = gensets.enumerate_generating(args.n, bound=_bound(args))
    except TooLarge as exc:
        raise CliError(str(exc), EXIT_DOMAIN) from exc
    if args.count_only:
        total = gensets.count_subsets(args.n)
        out.write(f"generating={len(sets)} non_generating={total - len(sets)} total={total}\n")
    elif args.orbits:
        orbits = gensets.d3_orbits(sets)
        out.write(f"orbits={len(orbits)}\n")
        for o in orbits:
            out.write(f"{o.representative.to_text()}\n")
    else:
        for a in sets:
            out.write(a.to_text() + "\n")
    return EXIT_OK


def cmd_check(args, out) -> int:
    lines = _read(args.file).splitlines()
    parsed = []
    for lineno, line in enumerate(lines, start=1):
        line = line.strip()
        if not line or line.startswith("#") or "=" in line:
            continue
        try:
            parsed.append((lineno, gensets.IndexSet.from_text(line)))
        except ParseError as exc:
            raise CliError(f"line {lineno}: {exc}", EXIT_INPUT) from exc
    for lineno, a in parsed:
        if len(a) != a.size_n:
            out.write(f"line={lineno} verdict=wrong_cardinality\n")
            continue
        verdict = gensets.is_generating(a)
        word = "generating" if verdict else "not_generating"
        if args.brute_force and a.size_n > BRUTE_FORCE_MAX_N:
            out.write(f"line={lineno} verdict={word} brute_force=skipped\n")
        elif args.brute_force:
            if gensets.is_generating_bruteforce(a) != verdict:
                out.write(f"line={lineno} verdict={word} brute_force=DISAGREE\n")
                raise CliError(f"line {lineno}: rank criterion and brute force disagree", EXIT_INTERNAL)
            out.write(f"line={lineno} verdict={word} brute_force=agree\n")
        else:
            out.write(f"line={lineno} verdict={word}\n")
    return EXIT_OK


def cmd_minor(args, out) -> int:
    if args.closed_form_n is not None:
        if args.closed_form_n < 1:
            raise CliError("--closed-form-n must be positive", EXIT_INPUT)
        out.write(f"{binomial.triangular_minor_closed_form(args.closed_form_n)}\n")
        return EXIT_OK
    if not args.rows:
        raise CliError("no rows given", EXIT_INPUT)
    try:
        rows = binomial.check_selection(args.rows)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_INPUT) from exc
    cols = list(range(len(rows))) if args.cols is None else args.cols
    if len(cols) != len(rows):
        raise CliError(f"{len(rows)} rows but {len(cols)} columns", EXIT_INPUT)
    method = args.method
    if method in ("vandermonde", "both") and cols != list(range(len(rows))):
        raise CliError("the Vandermonde route needs columns 0..n-1", EXIT_INPUT)
    if method == "vandermonde":
        out.write(f"{binomial.minor_vandermonde(rows)}\n")
    elif method == "bareiss":
        out.write(f"{binomial.minor_bareiss(rows, cols)}\n")
    else:
        v = binomial.minor_vandermonde(rows)
        b = binomial.minor_bareiss(rows, cols)
        out.write(f"{v} {b} {'MATCH' if v == b else 'MISMATCH'}\n")
        if v != b:
            return EXIT_INTERNAL
    return EXIT_OK


def cmd_embed(args, out) -> int:
    if args.file is None:
        if not isinstance(args.show_index_set, int) or isinstance(args.show_index_set, bool):
            raise CliError("give an edge-list file, or --show-index-set N", EXIT_INPUT)
        if args.show_index_set < 1:
            raise CliError("N must be positive", EXIT_DOMAIN)
        out.write(gensets.delahan_index_set(args.show_index_set).to_text() + "\n")
        return EXIT_OK
    try:
        h = graph.SimpleGraph.from_edge_list(_read(args.file))
    except ParseError as exc:
        raise CliError(str(exc), EXIT_INPUT) from exc
    if h.n < 1:
        raise CliError("graph must have at least one vertex", EXIT_DOMAIN)
    g = graph.embed(h)
    out.write(f"order={g.order}\n")
    out.write(f"S={g.seq}\n")
    if args.show_index_set is not None:
        out.write(f"index_set={gensets.delahan_index_set(h.n).to_text()}\n")
    if args.verify:
        try:
            ok = graph.extract(g) == h
        except InternalMismatch as exc:
            raise CliError(str(exc), EXIT_INTERNAL) from exc
        if not ok:
            raise CliError("extract(embed(H)) != H", EXIT_INTERNAL)
        out.write("VERIFIED\n")
    return EXIT_OK


def cmd_extract(args, out) -> int:
    seq = _bits(args.seq)
    if graph.triangular_root(seq.length) is None:
        raise CliError(f"sequence length {seq.length} is not a triangular number", EXIT_DOMAIN)
    g = graph.graph_from_seq(seq)
    try:
        h = graph.extract(g)
    except InternalMismatch as exc:
        raise CliError(str(exc), EXIT_INTERNAL) from exc
    if args.dot:
        labels = None
        if args.annotate:
            labels = [f"{u} ({triangular_number(u - 1) + 1})" for u in range(1, h.n + 1)]
        out.write(h.to_dot("G", labels))
    else:
        out.write(h.to_edge_list())
    return EXIT_OK


def _int_arg(text: str) -> int:
    try:
        return int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="steinhaus", description="Steinhaus triangles and graphs over GF(2).")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("triangle", help="build and print a Steinhaus triangle")
    p.add_argument("seq", nargs="?", help="top row, e.g. 0010100")
    p.add_argument("--from-right", metavar="R", help="build from the right side instead")
    p.add_argument("--from-left", metavar="L", help="build from the left side instead")
    p.add_argument("--rotate", type=int, choices=(120, 240), action="append")
    p.add_argument("--reflect", action="store_true")
    p.add_argument("--pretty", action="store_true", help="indented human-readable layout")
    p.set_defaults(func=cmd_triangle)

    p = sub.add_parser("gensets", help="enumerate generating index sets of size-n triangles")
    p.add_argument("n", type=int)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--count-only", action="store_true")
    g.add_argument("--orbits", action="store_true", help="one representative per dihedral orbit")
    p.add_argument("--max-n", type=int, help=f"enumeration bound (default {gensets.DEFAULT_ENUMERATION_BOUND}, env {BOUND_ENV})")
    p.set_defaults(func=cmd_gensets)

    p = sub.add_parser("check", help="decide whether index sets are generating")
    p.add_argument("file", help="file of 'n; (i,j) ...' lines, or - for stdin")
    p.add_argument("--brute-force", action="store_true", help="also run the exhaustive oracle (skipped above n = 5)")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("minor", help="binomial minors det B(rows; cols)")
    p.add_argument("rows", nargs="*", type=int)
    p.add_argument("--cols", nargs="+", type=int)
    p.add_argument("--closed-form-n", type=int, metavar="N")
    p.add_argument("--method", choices=("vandermonde", "bareiss", "both"), default="both")
    p.set_defaults(func=cmd_minor)

    p = sub.add_parser("embed", help="embed a graph as G[W_n] of a Steinhaus graph")
    p.add_argument("file", nargs="?", help="edge-list file, or - for stdin")
    p.add_argument("--show-index-set", nargs="?", const=True, type=_int_arg, metavar="N")
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("extract", help="the graph induced on W_n by G(seq)")
    p.add_argument("seq")
    p.add_argument("--dot", action="store_true")
    p.add_argument("--annotate", action="store_true", help="with --dot, label vertices with their W_n preimage")
    p.set_defaults(func=cmd_extract)
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
