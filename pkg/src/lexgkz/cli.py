"""Command line front end.

Exit codes: 0 success, 1 input error, 2 recovery failure,
3 validation failure.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import formats
from .errors import BudgetExceeded, DegenerateSet, NotSimplicial, RecoveryError
from .exactgeom import hull_facets
from .formats import InputError
from .gkz import gkz_vector
from .lexenum import enumerate_lex, roundtrip_report
from .recover import recover
from .subdivide import Subdivision, lex_subdivision, lex_triangulation, regular_from_heights, validate

EXIT_OK, EXIT_INPUT, EXIT_RECOVERY, EXIT_INVALID = 0, 1, 2, 3


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="ascii")
    except (OSError, UnicodeDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from None


def _points(args):
    return formats.parse_points(_read(args.points))


def _check_triangulation(V, cells) -> list[str]:
    problems = [f"non-simplicial cell {' '.join(map(str, sorted(c)))}"
                for c in cells if len(c) > V.d + 1]
    return problems + validate(Subdivision(V, cells)).violations


def cmd_hull(args, out) -> int:
    V = _points(args)
    for f in hull_facets(V, V.labels):
        out.write(formats.format_facet(f) + "\n")
    return EXIT_OK


def cmd_triangulate(args, out) -> int:
    V = _points(args)
    moves = formats.parse_script(_read(args.script), V)
    if args.subdivision:
        out.write(formats.format_subdivision(lex_subdivision(V, moves)))
        return EXIT_OK
    if len(moves) != V.n:
        missing = sorted(set(V.labels) - {m.label for m in moves})
        raise InputError(f"script misses points {missing}; use --subdivision for partial scripts")
    out.write(formats.format_subdivision(lex_triangulation(V, moves)))
    return EXIT_OK


def cmd_gkz(args, out) -> int:
    V = _points(args)
    cells = formats.parse_cells(_read(args.triangulation), V)
    problems = _check_triangulation(V, cells)
    if problems:
        for p in problems:
            print(p, file=sys.stderr)
        return EXIT_INVALID
    out.write(formats.format_vector(gkz_vector(Subdivision(V, cells))))
    return EXIT_OK


def cmd_recover(args, out) -> int:
    V = _points(args)
    z = formats.parse_vector(_read(args.gkz), V.n, "GKZ-vector")
    try:
        result = recover(V, z)
    except (RecoveryError, NotSimplicial) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_RECOVERY
    out.write(formats.format_script(result.script))
    out.write("\n")
    out.write(formats.format_subdivision(result.triangulation))
    return EXIT_OK


def cmd_enumerate(args, out) -> int:
    V = _points(args)
    try:
        report = enumerate_lex(V, limit=args.limit, seed=args.seed)
    except BudgetExceeded as exc:
        raise InputError(str(exc)) from None
    rt = roundtrip_report(report)
    out.write(f"distinct: {len(report.triangulations)}\n")
    if report.sampled:
        out.write(f"sampled: {report.scripts_run} scripts, seed {report.seed}\n")
    else:
        out.write(f"scripts: {report.scripts_run}\n")
    for i, key in enumerate(report.keys(), 1):
        T = report.triangulations[key]
        script = ", ".join(map(str, report.witness_scripts[key]))
        out.write(f"[{i}] script: {script}\n")
        out.write("    cells: " + " / ".join(" ".join(map(str, c)) for c in key) + "\n")
        out.write("    gkz: " + " ".join(map(str, gkz_vector(T))) + "\n")
    out.write(f"gkz-injective: {'yes' if report.injective else 'no'}\n")
    verdict = "OK" if rt.ok else "FAILED"
    out.write(f"round-trip: {rt.total - len(rt.failures)}/{rt.total} {verdict}\n")
    for key, why in rt.failures:
        out.write(f"  failed: {' / '.join(' '.join(map(str, c)) for c in key)}: {why}\n")
    return EXIT_OK if rt.ok else EXIT_RECOVERY


def cmd_lift(args, out) -> int:
    V = _points(args)
    heights = formats.parse_vector(_read(args.heights), V.n, "heights")
    out.write(formats.format_subdivision(regular_from_heights(V, heights, upper=args.upper)))
    return EXIT_OK


def cmd_check(args, out) -> int:
    V = _points(args)
    cells = formats.parse_cells(_read(args.triangulation), V)
    problems = _check_triangulation(V, cells)
    if problems:
        out.write("invalid\n")
        for p in problems:
            out.write(p + "\n")
        return EXIT_INVALID
    out.write("valid\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lexgkz",
        description="Lexicographic triangulations and GKZ-vectors in exact arithmetic.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hull", help="list the facets of the point set")
    p.add_argument("points")
    p.set_defaults(func=cmd_hull)

    p = sub.add_parser("triangulate", help="run a pull/push script")
    p.add_argument("points")
    p.add_argument("script")
    p.add_argument("--subdivision", action="store_true",
                   help="allow partial scripts and print non-simplicial cells")
    p.set_defaults(func=cmd_triangulate)

    p = sub.add_parser("gkz", help="GKZ-vector of a triangulation")
    p.add_argument("points")
    p.add_argument("triangulation")
    p.set_defaults(func=cmd_gkz)

    p = sub.add_parser("recover", help="recover a lexicographic triangulation from its GKZ-vector")
    p.add_argument("points")
    p.add_argument("gkz")
    p.set_defaults(func=cmd_recover)

    p = sub.add_parser("enumerate", help="enumerate all lexicographic triangulations")
    p.add_argument("points")
    p.add_argument("--limit", type=int, default=None, help="sample this many random scripts")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("lift", help="regular subdivision induced by heights")
    p.add_argument("points")
    p.add_argument("heights")
    p.add_argument("--upper", action="store_true", help="project upper instead of lower facets")
    p.set_defaults(func=cmd_lift)

    p = sub.add_parser("check", help="validate a triangulation file")
    p.add_argument("points")
    p.add_argument("triangulation")
    p.set_defaults(func=cmd_check)
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    args = build_parser().parse_args(argv)
    out = out or sys.stdout
    try:
        return args.func(args, out)
    except (InputError, ValueError, DegenerateSet) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
