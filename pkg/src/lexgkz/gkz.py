"""GKZ-vectors and the extremal-value tests that drive recovery.

A GKZ-vector is a tuple of ``Fraction`` indexed by ``label - 1``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DegenerateSet
from .exactgeom import PointSet, Labels, is_vertex, subset_dimension, volume
from .subdivide import Move, Sign, Subdivision

GKZVector = tuple[Fraction, ...]


def gkz_vector(T: Subdivision) -> GKZVector:
    """Per point, the total volume of the simplices that contain it."""
    V = T.base
    z = [Fraction(0)] * V.n
    for cell in T.cells:
        vol = volume(V, cell)
        for k in cell:
            z[k - 1] += vol
    return tuple(z)


def _full(V: PointSet, W: Labels) -> None:
    if subset_dimension(V, W) != V.d:
        raise DegenerateSet(f"labels {sorted(W)} do not span R^{V.d}")


def z_max(V: PointSet, W: Iterable[int], k: int) -> Fraction:
    """Largest possible entry for ``k`` over triangulations of ``W``."""
    W = frozenset(W)
    _full(V, W)
    return volume(V, W) if k in W else Fraction(0)


def z_min(V: PointSet, W: Iterable[int], k: int) -> Fraction:
    """Smallest possible entry for ``k`` over triangulations of ``W``."""
    W = frozenset(W)
    _full(V, W)
    return volume(V, W) - volume(V, W - {k}) if k in W else Fraction(0)


def is_ear_point(T: Subdivision, k: int) -> bool:
    V = T.base
    z = gkz_vector(T)
    return is_vertex(V, k) and z[k - 1] == volume(V, V.labels) - volume(V, set(V.labels) - {k})


def _tagged(pull: bool, push: bool, k: int) -> list[Move]:
    out = []
    if pull:
        out.append(Move(k, Sign.PULL))
    if push:
        out.append(Move(k, Sign.PUSH))
    return out


def first_candidates(V: PointSet, z: Sequence[Fraction]) -> list[Move]:
    """Points that may be pulled or pushed first, in label order.

    A point tagged both ways is the apex of a pyramid.
    """
    out: list[Move] = []
    for k in V.labels:
        zk = z[k - 1]
        out += _tagged(zk == z_max(V, V.labels, k), zk == z_min(V, V.labels, k), k)
    return out


def next_sums(S: Subdivision, k: int) -> tuple[Fraction, Fraction]:
    """Entry for ``k`` if pulled next and if pushed next in ``S``."""
    V = S.base
    pull = push = Fraction(0)
    for cell in S.cells:
        if k in cell:
            vol = volume(V, cell)
            pull += vol
            push += vol - volume(V, cell - {k})
    return pull, push


def next_candidates(S: Subdivision, z: Sequence[Fraction], remaining: Iterable[int]) -> list[Move]:
    """Remaining points whose entry matches the pull-next or push-next sum.

    Sums over cells not containing the point vanish, so a point absent
    from ``S`` qualifies both ways exactly when its entry is zero.
    """
    out: list[Move] = []
    for k in sorted(remaining):
        pull, push = next_sums(S, k)
        zk = z[k - 1]
        out += _tagged(zk == pull, zk == push, k)
    return out

