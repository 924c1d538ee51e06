"""Greedy reconstruction of a lexicographic triangulation from its GKZ-vector."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple, Sequence

from .errors import NoCandidate, NotSimplicial, VerificationFailed
from .gkz import gkz_vector, next_candidates
from .exactgeom import PointSet
from .subdivide import (
    LexScript,
    Move,
    Sign,
    Subdivision,
    Triangulation,
    apply_move,
    present_points,
    trivial,
    validate,
)


class Step(NamedTuple):
    label: int
    sign: Sign
    cells: int  # size of the subdivision after the move


@dataclass
class RecoveryResult:
    script: LexScript
    triangulation: Triangulation
    steps: list[Step] = field(default_factory=list)


def _check_vector(V: PointSet, z: Sequence) -> tuple[Fraction, ...]:
    if len(z) != V.n:
        raise ValueError(f"GKZ-vector has {len(z)} entries, point set has {V.n} points")
    z = tuple(Fraction(v) for v in z)
    if any(v < 0 for v in z):
        raise ValueError("GKZ-vector entries must be non-negative")
    return z


def recover(V: PointSet, z: Sequence) -> RecoveryResult:
    """Recover the lexicographic triangulation whose GKZ-vector is ``z``.

    At each step the lowest-labelled present point that is a candidate to
    be pulled (preferred) or pushed next is processed. Points that have
    dropped out of the subdivision are appended as pushes at the end,
    provided their entry is zero.

    Raises :class:`NoCandidate` when the greedy gets stuck,
    :class:`NotSimplicial` when it ends on a non-triangulation and
    :class:`VerificationFailed` when the result has a different vector.
    """
    z = _check_vector(V, z)
    S = trivial(V)
    remaining = set(V.labels)
    moves: list[Move] = []
    steps: list[Step] = []

    while live := remaining & present_points(S):
        candidates = next_candidates(S, z, live)
        if not candidates:
            raise NoCandidate(f"no candidate among points {sorted(live)} after {len(moves)} steps")
        move = candidates[0]
        S = apply_move(S, move)
        remaining.discard(move.label)
        moves.append(move)
        steps.append(Step(move.label, move.sign, len(S.cells)))

    for k in sorted(remaining):
        if z[k - 1] != 0:
            raise NoCandidate(f"point {k} is absent but has GKZ entry {z[k - 1]}")
        moves.append(Move(k, Sign.PUSH))
        steps.append(Step(k, Sign.PUSH, len(S.cells)))

    if not S.is_simplicial:
        raise NotSimplicial(f"greedy ended on a non-simplicial subdivision {S!r}")
    T = Triangulation(V, S.cells)
    if not verify(V, z, T):
        got = " ".join(map(str, gkz_vector(T)))
        raise VerificationFailed(f"greedy produced a triangulation with GKZ-vector {got}")
    return RecoveryResult(moves, T, steps)


def verify(V: PointSet, z: Sequence, T: Subdivision) -> bool:
    """Whether ``T`` is a valid triangulation of ``V`` with GKZ-vector ``z``."""
    if T.base != V or len(z) != V.n or not T.is_simplicial:
        return False
    return bool(validate(T)) and gkz_vector(T) == tuple(Fraction(v) for v in z)
