"""Plain-text file formats read and written by the command line tool.

All formats are ASCII with LF line endings. Rationals are written in
lowest terms, as ``p/q`` only when the denominator is not 1. Lines
starting with ``#`` and blank lines are ignored on input.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DegenerateSet
from .exactgeom import Facet, PointSet
from .subdivide import LexScript, Move, Sign, Subdivision, cell_key


class InputError(ValueError):
    """Malformed or inconsistent input file."""


def _lines(text: str) -> list[str]:
    return [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]


def parse_rational(tok: str) -> Fraction:
    try:
        return Fraction(tok)
    except (ValueError, ZeroDivisionError):
        raise InputError(f"not a rational number: {tok!r}") from None


def _int(tok: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise InputError(f"not an integer: {tok!r}") from None


def parse_points(text: str) -> PointSet:
    lines = _lines(text)
    if not lines:
        raise InputError("points file is empty")
    header = lines[0].split()
    if len(header) != 2:
        raise InputError("points header must be 'd n'")
    d, n = map(_int, header)
    rows = lines[1:]
    if len(rows) != n:
        raise InputError(f"header announces {n} points, file has {len(rows)}")
    points = []
    for i, row in enumerate(rows, 1):
        toks = row.split()
        if len(toks) != d:
            raise InputError(f"point {i} has {len(toks)} coordinates, expected {d}")
        points.append([parse_rational(t) for t in toks])
    try:
        return PointSet(points)
    except DegenerateSet as exc:
        raise InputError(str(exc)) from None
    except ValueError as exc:
        raise InputError(f"duplicate point: {exc}") from None


def format_points(V: PointSet) -> str:
    rows = [f"{V.d} {V.n}"] + [" ".join(map(str, p)) for p in V.points]
    return "\n".join(rows) + "\n"


def parse_cells(text: str, V: PointSet) -> list[tuple[int, ...]]:
    """Cells of a triangulation or subdivision file, checked against ``V``."""
    lines = _lines(text)
    if not lines:
        raise InputError("triangulation file is empty")
    m = _int(lines[0])
    rows = lines[1:]
    if len(rows) != m:
        raise InputError(f"header announces {m} cells, file has {len(rows)}")
    cells = []
    for row in rows:
        cell = tuple(_int(t) for t in row.split())
        bad = [k for k in cell if not 1 <= k <= V.n]
        if bad:
            raise InputError(f"cell {row!r} has indices outside 1..{V.n}")
        if len(set(cell)) != len(cell):
            raise InputError(f"cell {row!r} repeats an index")
        cells.append(cell)
    return cells


def format_cells(cells: Iterable[Iterable[int]]) -> str:
    rows = sorted(cell_key(c) for c in cells)
    return "\n".join([str(len(rows))] + [" ".join(map(str, r)) for r in rows]) + "\n"


def format_subdivision(S: Subdivision) -> str:
    return format_cells(S.cells)


def parse_script(text: str, V: PointSet | None = None) -> LexScript:
    moves = []
    for row in _lines(text):
        toks = row.split()
        if len(toks) != 2 or toks[0].lower() not in ("pull", "push"):
            raise InputError(f"script line must be 'pull K' or 'push K': {row!r}")
        moves.append(Move(_int(toks[1]), Sign(toks[0].lower())))
    labels = [m.label for m in moves]
    if len(set(labels)) != len(labels):
        raise InputError("script repeats a point index")
    if V is not None:
        bad = [k for k in labels if not 1 <= k <= V.n]
        if bad:
            raise InputError(f"script indices outside 1..{V.n}: {bad}")
    return moves


def format_script(moves: Sequence[Move]) -> str:
    return "".join(f"{m}\n" for m in moves)


def parse_vector(text: str, n: int | None = None, what: str = "vector") -> tuple[Fraction, ...]:
    values = tuple(parse_rational(t) for row in _lines(text) for t in row.split())
    if n is not None and len(values) != n:
        raise InputError(f"{what} has {len(values)} entries, point set has {n} points")
    return values


def format_vector(values: Iterable[Fraction]) -> str:
    return "".join(f"{v}\n" for v in values)


def format_facet(f: Facet) -> str:
    idx = " ".join(map(str, f.sorted_vertices()))
    normal = " ".join(map(str, f.hyperplane.normal))
    return f"{idx} : {normal} | {f.hyperplane.offset}"
