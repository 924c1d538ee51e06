"""Exact-rational geometric kernel.

Points are tuples of :class:`fractions.Fraction`; point sets carry fixed
1-based labels and every predicate here is decided without rounding.
Subsets of a :class:`PointSet` are passed around as collections of labels.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from . import _linalg
from .errors import DegenerateSet
from .simplex import feasible_strict

Point = tuple[Fraction, ...]
Labels = frozenset[int]


def as_point(coords: Iterable) -> Point:
    return tuple(Fraction(c) for c in coords)


class PointSet:
    """An indexed, duplicate-free, full-dimensional point configuration.

    Labels run from 1 to ``n`` in the order the points were given.
    Instances are immutable and hashable, so kernel results are memoized
    per point set.
    """

    __slots__ = ("points", "d", "_hash")

    def __init__(self, points: Iterable[Iterable]):
        pts = tuple(as_point(p) for p in points)
        if not pts:
            raise ValueError("a point set needs at least one point")
        d = len(pts[0])
        if d < 1 or any(len(p) != d for p in pts):
            raise ValueError("all points must share one ambient dimension >= 1")
        seen: dict[Point, int] = {}
        for i, p in enumerate(pts, 1):
            if p in seen:
                raise ValueError(f"points {seen[p]} and {i} coincide")
            seen[p] = i
        if affine_dimension(pts) != d:
            raise DegenerateSet(f"points do not span R^{d}")
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "_hash", hash(pts))

    def __setattr__(self, name, value):
        raise AttributeError("PointSet is immutable")

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def labels(self) -> range:
        return range(1, self.n + 1)

    def __getitem__(self, label: int) -> Point:
        return self.points[label - 1]

    def coords(self, labels: Iterable[int]) -> list[Point]:
        return [self.points[i - 1] for i in sorted(labels)]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PointSet) and self.points == other.points

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"PointSet(d={self.d}, n={self.n})"


@dataclass(frozen=True)
class Hyperplane:
    """``{x : normal . x = offset}`` with primitive integral coefficients."""

    normal: tuple[int, ...]
    offset: int

    def value(self, x: Sequence[Fraction]) -> Fraction:
        """Signed slack ``normal . x - offset``; positive means outside."""
        return sum((a * c for a, c in zip(self.normal, x)), Fraction(0)) - self.offset


@dataclass(frozen=True)
class Facet:
    vertices: Labels
    hyperplane: Hyperplane

    def sorted_vertices(self) -> tuple[int, ...]:
        return tuple(sorted(self.vertices))


def affine_dimension(points: Sequence[Sequence[Fraction]]) -> int:
    """Dimension of the affine span; ``-1`` for the empty list."""
    if not points:
        return -1
    base = points[0]
    diffs = [[Fraction(a) - b for a, b in zip(p, base)] for p in points[1:]]
    return _linalg.rank(diffs) if diffs else 0


def subset_dimension(V: PointSet, labels: Iterable[int]) -> int:
    return _subset_dimension(V, frozenset(labels))


@lru_cache(maxsize=1 << 16)
def _subset_dimension(V: PointSet, labels: Labels) -> int:
    return affine_dimension(V.coords(labels))


def _simplex_det(simplex: Sequence[Sequence[Fraction]]) -> Fraction:
    base = simplex[0]
    return _linalg.determinant([[Fraction(a) - b for a, b in zip(p, base)] for p in simplex[1:]])


def orientation(simplex: Sequence[Sequence[Fraction]]) -> int:
    """Sign of ``det[p2 - p1, ..., p_{d+1} - p1]``."""
    if len(simplex) != len(simplex[0]) + 1:
        raise ValueError("orientation needs exactly d+1 points in dimension d")
    det = _simplex_det(simplex)
    return (det > 0) - (det < 0)


def simplex_volume(simplex: Sequence[Sequence[Fraction]]) -> Fraction:
    d = len(simplex[0])
    if len(simplex) != d + 1:
        raise ValueError("a d-simplex has exactly d+1 vertices")
    return abs(_simplex_det(simplex)) / math.factorial(d)


def _primitive(coeffs: Sequence[Fraction]) -> tuple[int, ...]:
    lcm = 1
    for c in coeffs:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    ints = [int(c * lcm) for c in coeffs]
    g = math.gcd(*ints)
    return tuple(v // g for v in ints)


def hull_facets(V: PointSet, subset: Iterable[int]) -> list[Facet]:
    """All facets of ``conv(subset)``, ordered by sorted vertex labels.

    Brute force: every affinely independent ``d``-subset spans a candidate
    hyperplane, kept when the whole subset lies weakly on one side.
    Each facet records every subset point on its hyperplane, not only
    the extreme ones.
    """
    return list(_hull_facets(V, frozenset(subset)))


@lru_cache(maxsize=1 << 16)
def _hull_facets(V: PointSet, subset: Labels) -> tuple[Facet, ...]:
    d = V.d
    if subset_dimension(V, subset) != d:
        raise DegenerateSet(f"labels {sorted(subset)} do not span R^{d}")
    labels = sorted(subset)
    found: dict[Labels, Facet] = {}
    for combo in itertools.combinations(labels, d):
        if any(frozenset(combo) <= f for f in found):
            continue
        p0 = V[combo[0]]
        diffs = [[a - b for a, b in zip(V[j], p0)] for j in combo[1:]]
        null = _linalg.nullspace(diffs, d)
        if len(null) != 1:
            continue  # combo is affinely dependent
        normal = null[0]
        offset = sum((a * b for a, b in zip(normal, p0)), Fraction(0))
        coeffs = _primitive([*normal, offset])
        plane = Hyperplane(coeffs[:-1], coeffs[-1])
        slack = {i: plane.value(V[i]) for i in labels}
        if all(s >= 0 for s in slack.values()):
            plane = Hyperplane(tuple(-a for a in plane.normal), -plane.offset)
        elif not all(s <= 0 for s in slack.values()):
            continue
        on = frozenset(i for i, s in slack.items() if s == 0)
        found[on] = Facet(on, plane)
    return tuple(sorted(found.values(), key=Facet.sorted_vertices))


def is_visible(facet: Facet, p: Sequence[Fraction]) -> bool:
    """Whether ``p`` lies in the open halfspace beyond ``facet``."""
    return facet.hyperplane.value(p) > 0


def cone_over_facets(V: PointSet, cell: Iterable[int], apex: int) -> tuple[Labels, ...]:
    """Cells obtained by pulling ``apex`` inside the full-dimensional ``cell``."""
    return _cone(V, frozenset(cell), apex)


@lru_cache(maxsize=1 << 16)
def _cone(V: PointSet, cell: Labels, apex: int) -> tuple[Labels, ...]:
    if apex not in cell:
        return (cell,)
    return tuple(f.vertices | {apex} for f in _hull_facets(V, cell) if apex not in f.vertices)


def volume(V: PointSet, subset: Iterable[int]) -> Fraction:
    """``d``-volume of ``conv(subset)``, zero for flat subsets.

    The hull is triangulated by pulling its points one at a time in label
    order and the simplex volumes are summed.
    """
    return _volume(V, frozenset(subset))


@lru_cache(maxsize=1 << 16)
def _volume(V: PointSet, subset: Labels) -> Fraction:
    if not subset or subset_dimension(V, subset) < V.d:
        return Fraction(0)
    if len(subset) == V.d + 1:
        return simplex_volume(V.coords(subset))
    cells: tuple[Labels, ...] = (subset,)
    for k in sorted(subset):
        cells = tuple(c for cell in cells for c in _cone(V, cell, k))
        if all(len(c) == V.d + 1 for c in cells):
            break
    return sum((simplex_volume(V.coords(c)) for c in cells), Fraction(0))


def lp_feasible_strict(equalities: Sequence[tuple[Sequence, object]],
                       weak: Sequence[tuple[Sequence, object]] = (),
                       strict: Sequence[tuple[Sequence, object]] = ()) -> bool:
    """Exact feasibility of ``eq.x = r``, ``weak.x <= r``, ``strict.x < r``."""
    conv = lambda rows: [(tuple(map(Fraction, v)), Fraction(r)) for v, r in rows]  # noqa: E731
    return feasible_strict(conv(equalities), conv(weak), conv(strict))


def _affine_row(p: Point, sign: int = 1) -> tuple[Point, Fraction]:
    # unknowns (a, alpha): row encodes sign * (a . p - alpha)
    return tuple(sign * c for c in p) + (Fraction(-sign),), Fraction(0)


def is_face(V: PointSet, S: Iterable[int], T: Iterable[int]) -> bool:
    """Whether ``T`` is cut out of ``S`` by a supporting hyperplane.

    The empty set is a face; ``S`` itself is not (a supporting hyperplane
    may not contain all of ``S``).
    """
    S, T = frozenset(S), frozenset(T)
    if not T <= S:
        raise ValueError("candidate face must be a subset")
    if not T:
        return True
    if T == S:
        return False
    return lp_feasible_strict(
        [_affine_row(V[t]) for t in T],
        strict=[_affine_row(V[s]) for s in S - T],
    )


def cells_meet_properly(V: PointSet, A: Iterable[int], B: Iterable[int]) -> bool:
    """Whether ``conv(A)`` and ``conv(B)`` meet in a common face spanned by ``A & B``.

    Certified by a hyperplane through ``A & B`` with the rest of ``A``
    strictly on one side and the rest of ``B`` strictly on the other.
    """
    A, B = frozenset(A), frozenset(B)
    return _meet_properly(V, A, B) if min(A) <= min(B) else _meet_properly(V, B, A)


@lru_cache(maxsize=1 << 16)
def _meet_properly(V: PointSet, A: Labels, B: Labels) -> bool:
    C = A & B
    return lp_feasible_strict(
        [_affine_row(V[c]) for c in C],
        strict=[_affine_row(V[a]) for a in A - C] + [_affine_row(V[b], -1) for b in B - C],
    )


def shadow_facets(V: PointSet, W: Iterable[int], w: int) -> list[Facet]:
    """Facets of ``conv(W)`` visible from point ``w``."""
    p = V[w]
    return [f for f in hull_facets(V, W) if is_visible(f, p)]


def shadow_boundary(V: PointSet, W: Iterable[int], w: int) -> list[Labels]:
    """Subfacets of ``conv(W)`` lying in exactly one facet visible from ``w``.

    Every subfacet of a polytope is the intersection of exactly two facets,
    so it is enough to intersect visible facets with invisible ones.
    """
    facets = hull_facets(V, W)
    p = V[w]
    seen = [f for f in facets if is_visible(f, p)]
    unseen = [f for f in facets if not is_visible(f, p)]
    out: set[Labels] = set()
    for f in seen:
        for g in unseen:
            ridge = f.vertices & g.vertices
            if subset_dimension(V, ridge) == V.d - 2:
                out.add(ridge)
    return sorted(out, key=sorted)


def is_vertex(V: PointSet, k: int) -> bool:
    """Whether point ``k`` is an extreme point of the whole configuration."""
    if V.n == 1:
        return True
    return is_face(V, V.labels, {k})


def clear_caches() -> None:
    """Drop all memoized kernel results (hulls, volumes, cell refinements)."""
    from . import subdivide

    for fn in (_subset_dimension, _hull_facets, _cone, _volume, _meet_properly, subdivide._push_cell):
        fn.cache_clear()
