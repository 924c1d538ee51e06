"""Brute-force enumeration of lexicographic triangulations.

Every script (an ordering of the points with a pull/push tag per point)
is run and the resulting triangulations are deduplicated. This is the
oracle the recovery algorithm is checked against.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from typing import Iterator

from .errors import BudgetExceeded, LexGKZError
from .exactgeom import PointSet
from .gkz import GKZVector, gkz_vector
from .recover import recover
from .subdivide import LexScript, Move, Sign, Triangulation, lex_triangulation

DEFAULT_BUDGET = 10**6


def script_count(n: int) -> int:
    return math.factorial(n) * 2**n


def all_scripts(n: int) -> Iterator[LexScript]:
    for order in itertools.permutations(range(1, n + 1)):
        for signs in itertools.product((Sign.PULL, Sign.PUSH), repeat=n):
            yield [Move(k, s) for k, s in zip(order, signs)]


def random_scripts(n: int, count: int, seed: int) -> Iterator[LexScript]:
    rng = random.Random(seed)
    for _ in range(count):
        order = rng.sample(range(1, n + 1), n)
        yield [Move(k, rng.choice((Sign.PULL, Sign.PUSH))) for k in order]


@dataclass
class EnumerationReport:
    points: PointSet
    triangulations: dict[tuple, Triangulation] = field(default_factory=dict)
    witness_scripts: dict[tuple, LexScript] = field(default_factory=dict)
    gkz_map: dict[GKZVector, set[tuple]] = field(default_factory=dict)
    scripts_run: int = 0
    sampled: bool = False
    seed: int | None = None

    def add(self, moves: LexScript) -> None:
        T = lex_triangulation(self.points, moves)
        key = T.key()
        self.scripts_run += 1
        if key in self.triangulations:
            return
        self.triangulations[key] = T
        self.witness_scripts[key] = list(moves)
        self.gkz_map.setdefault(gkz_vector(T), set()).add(key)

    def keys(self) -> list[tuple]:
        return sorted(self.triangulations)

    @property
    def injective(self) -> bool:
        return all(len(v) == 1 for v in self.gkz_map.values())


def enumerate_lex(V: PointSet, limit: int | None = None, seed: int = 0,
                  budget: int = DEFAULT_BUDGET) -> EnumerationReport:
    """All distinct lexicographic triangulations of ``V``.

    With ``limit`` set, that many scripts are drawn uniformly at random
    from a generator seeded with ``seed`` instead.
    """
    report = EnumerationReport(V)
    if limit is None:
        total = script_count(V.n)
        if total > budget:
            raise BudgetExceeded(f"{total} scripts exceed the budget of {budget}; pass a limit")
        scripts: Iterator[LexScript] = all_scripts(V.n)
    else:
        report.sampled, report.seed = True, seed
        scripts = random_scripts(V.n, limit, seed)
    for moves in scripts:
        report.add(moves)
    return report


@dataclass
class RoundTripReport:
    total: int
    failures: list[tuple[tuple, str]]

    @property
    def ok(self) -> bool:
        return not self.failures


def roundtrip_report(report: EnumerationReport) -> RoundTripReport:
    failures = []
    for key in report.keys():
        T = report.triangulations[key]
        try:
            got = recover(report.points, gkz_vector(T)).triangulation
        except LexGKZError as exc:
            failures.append((key, f"{type(exc).__name__}: {exc}"))
            continue
        if got != T:
            failures.append((key, f"recovered {got!r}"))
    return RoundTripReport(len(report.triangulations), failures)


def roundtrip_all(V: PointSet, limit: int | None = None, seed: int = 0,
                  budget: int = DEFAULT_BUDGET) -> RoundTripReport:
    """Recover every enumerated triangulation from its GKZ-vector."""
    return roundtrip_report(enumerate_lex(V, limit, seed, budget))
