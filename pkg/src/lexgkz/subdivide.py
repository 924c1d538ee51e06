"""Subdivisions of point sets, pulling and pushing, and height lifts."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable, NamedTuple, Sequence

from .errors import DegenerateSet, NoConvergence, NotSimplicial
from .exactgeom import (
    Labels,
    PointSet,
    _cone,
    cells_meet_properly,
    hull_facets,
    is_visible,
    subset_dimension,
    volume,
)


class Sign(enum.Enum):
    PULL = "pull"
    PUSH = "push"

    def __str__(self) -> str:
        return self.value


class Move(NamedTuple):
    label: int
    sign: Sign

    def __str__(self) -> str:
        return f"{self.sign} {self.label}"


LexScript = list[Move]


def script(*moves: tuple[int, str | Sign]) -> LexScript:
    """Build a script from ``(label, "pull"|"push")`` pairs."""
    return [Move(k, Sign(s)) for k, s in moves]


def check_script(V: PointSet, moves: Sequence[Move], full: bool = False) -> None:
    labels = [m.label for m in moves]
    if len(set(labels)) != len(labels):
        raise ValueError("a script may mention each point at most once")
    bad = [k for k in labels if not 1 <= k <= V.n]
    if bad:
        raise ValueError(f"script labels out of range: {bad}")
    if full and len(labels) != V.n:
        missing = sorted(set(V.labels) - set(labels))
        raise ValueError(f"script does not cover points {missing}")


def cell_key(cell: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted(cell))


class Subdivision:
    """A set of cells (label sets) over a fixed point set.

    Two subdivisions are equal when they share the point set and the set
    of cells; cell order is irrelevant.
    """

    __slots__ = ("base", "cells")

    def __init__(self, base: PointSet, cells: Iterable[Iterable[int]]):
        self.base = base
        self.cells: frozenset[Labels] = frozenset(frozenset(c) for c in cells)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subdivision):
            return NotImplemented
        return self.base == other.base and self.cells == other.cells

    def __hash__(self) -> int:
        return hash((self.base, self.cells))

    def sorted_cells(self) -> list[tuple[int, ...]]:
        return sorted(cell_key(c) for c in self.cells)

    def key(self) -> tuple[tuple[int, ...], ...]:
        """Canonical serialization used for dedupe."""
        return tuple(self.sorted_cells())

    @property
    def is_simplicial(self) -> bool:
        return all(len(c) == self.base.d + 1 for c in self.cells)

    def __repr__(self) -> str:
        body = ", ".join("{" + ",".join(map(str, c)) + "}" for c in self.sorted_cells())
        return f"{type(self).__name__}({body})"


class Triangulation(Subdivision):
    """A subdivision whose every cell has exactly ``d + 1`` labels."""

    def __init__(self, base: PointSet, cells: Iterable[Iterable[int]]):
        super().__init__(base, cells)
        fat = [cell_key(c) for c in self.cells if len(c) != base.d + 1]
        if fat:
            raise NotSimplicial(f"cells {sorted(fat)} are not simplices")


def trivial(V: PointSet) -> Subdivision:
    return Subdivision(V, [V.labels])


def present_points(S: Subdivision) -> frozenset[int]:
    return frozenset().union(*S.cells)


@lru_cache(maxsize=1 << 16)
def _push_cell(V: PointSet, cell: Labels, k: int) -> tuple[Labels, ...]:
    if k not in cell:
        return (cell,)
    rest = cell - {k}
    if subset_dimension(V, rest) < V.d:
        return (cell,)  # pyramid with apex k
    p = V[k]
    return (rest,) + tuple(f.vertices | {k} for f in hull_facets(V, rest) if is_visible(f, p))


def pull_point(S: Subdivision, k: int) -> Subdivision:
    """Cone every cell containing ``k`` from ``k`` over its facets avoiding ``k``."""
    V = S.base
    return Subdivision(V, [c for cell in S.cells for c in _cone(V, cell, k)])


def push_point(S: Subdivision, k: int) -> Subdivision:
    """Split every non-pyramid cell containing ``k`` into ``cell - k`` plus
    cones from ``k`` over the facets of ``cell - k`` that ``k`` sees."""
    V = S.base
    return Subdivision(V, [c for cell in S.cells for c in _push_cell(V, cell, k)])


def apply_move(S: Subdivision, move: Move) -> Subdivision:
    op = pull_point if move.sign is Sign.PULL else push_point
    return op(S, move.label)


def lex_subdivision(V: PointSet, moves: Sequence[Move]) -> Subdivision:
    check_script(V, moves)
    S = trivial(V)
    for move in moves:
        S = apply_move(S, move)
    return S


def lex_triangulation(V: PointSet, moves: Sequence[Move]) -> Triangulation:
    """Triangulation produced by a script that pulls or pushes every point."""
    check_script(V, moves, full=True)
    S = trivial(V)
    for move in moves:
        S = apply_move(S, move)
    return Triangulation(V, S.cells)


@dataclass
class ValidationReport:
    valid: bool
    violations: list[str] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.valid


def _fmt(cell: Iterable[int]) -> str:
    return " ".join(map(str, cell_key(cell)))


def validate(S: Subdivision) -> ValidationReport:
    """Check that the cells form a subdivision of ``conv(V)``.

    Full-dimensional cells that pairwise meet properly have disjoint
    interiors, so matching total volume certifies the cover.
    """
    V = S.base
    violations = []
    good = []
    for cell in sorted(S.cells, key=cell_key):
        if not cell or not all(1 <= k <= V.n for k in cell):
            violations.append(f"cell {_fmt(cell)} has labels outside 1..{V.n}")
        elif subset_dimension(V, cell) < V.d:
            violations.append(f"degenerate cell {_fmt(cell)}")
        else:
            good.append(cell)
    for a, b in combinations(good, 2):
        if not cells_meet_properly(V, a, b):
            violations.append(f"cells {_fmt(a)} and {_fmt(b)} overlap improperly")
    total = sum((volume(V, c) for c in good), Fraction(0))
    whole = volume(V, V.labels)
    if total != whole:
        kind = "deficit" if total < whole else "excess"
        violations.append(f"volume {kind}: cells cover {total}, hull has {whole}")
    return ValidationReport(not violations, violations)


def is_refinement(T: Subdivision, S: Subdivision) -> bool:
    """Whether every cell of ``T`` sits inside some cell of ``S``."""
    return all(any(t <= s for s in S.cells) for t in T.cells)


def regular_from_heights(V: PointSet, heights: Sequence, upper: bool = False) -> Subdivision:
    """Project the lower (or upper) facets of the lifted configuration.

    Heights that are an affine function of position induce no subdivision;
    the trivial one is returned.
    """
    if len(heights) != V.n:
        raise ValueError(f"expected {V.n} heights, got {len(heights)}")
    lifted = [(*p, Fraction(h)) for p, h in zip(V.points, heights)]
    try:
        L = PointSet(lifted)
    except DegenerateSet:
        return trivial(V)
    cells = []
    for f in hull_facets(L, L.labels):
        last = f.hyperplane.normal[-1]
        if (last > 0) if upper else (last < 0):
            cells.append(f.vertices)
    return Subdivision(V, cells) if cells else trivial(V)


MAX_DOUBLINGS = 60


def lift_heights(moves: Sequence[Move], n: int, base: Fraction) -> list[Fraction]:
    heights = [Fraction(0)] * n
    for rank, move in enumerate(moves):
        sign = 1 if move.sign is Sign.PUSH else -1
        heights[move.label - 1] = sign / base ** rank
    return heights


def lex_as_lift(V: PointSet, moves: Sequence[Move]) -> list[Fraction]:
    """Heights whose lower hull reproduces the lexicographic subdivision.

    Position ``r`` in the script gets magnitude ``M**-r``, positive when
    pushed and negative when pulled; ``M`` doubles until the induced
    subdivision matches.
    """
    check_script(V, moves, full=True)
    target = lex_subdivision(V, moves)
    span = max(abs(c) for p in V.points for c in p)
    M = Fraction(V.n) * (1 + span) ** 2
    for _ in range(MAX_DOUBLINGS + 1):
        heights = lift_heights(moves, V.n, M)
        if regular_from_heights(V, heights) == target:
            return heights
        M *= 2
    raise NoConvergence(f"no separation up to M = {M} reproduced the script")
