"""Exact two-phase simplex method with Bland's anti-cycling rule.

Only what the geometric kernel needs: decide whether a system mixing
equalities, weak and strict inequalities has a real solution.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Row = tuple[Sequence[Fraction], Fraction]

OPTIMAL, INFEASIBLE, UNBOUNDED = "optimal", "infeasible", "unbounded"


def _pivot(tab: list[list[Fraction]], z: list[Fraction], basis: list[int], r: int, c: int) -> None:
    p = tab[r][c]
    tab[r] = [v / p for v in tab[r]]
    pr = tab[r]
    for i, row in enumerate(tab):
        if i != r and row[c] != 0:
            f = row[c]
            tab[i] = [a - f * b for a, b in zip(row, pr)]
    if z[c] != 0:
        f = z[c]
        z[:] = [a - f * b for a, b in zip(z, pr)]
    basis[r] = c


def _iterate(tab, z, basis, allowed: int) -> str:
    while True:
        # Bland: lowest-index improving column, lowest-index leaving variable
        enter = next((j for j in range(allowed) if z[j] < 0), None)
        if enter is None:
            return OPTIMAL
        best = None
        for i, row in enumerate(tab):
            if row[enter] > 0:
                ratio = row[-1] / row[enter]
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            return UNBOUNDED
        _pivot(tab, z, basis, best[1], enter)


def _objective_row(tab, basis, cost: Sequence[Fraction], width: int) -> list[Fraction]:
    z = [-Fraction(c) for c in cost] + [Fraction(0)] * (width - len(cost))
    for i, b in enumerate(basis):
        cb = cost[b] if b < len(cost) else 0
        if cb:
            z = [a + cb * v for a, v in zip(z, tab[i])]
    return z


def maximize(cost: Sequence[Fraction], a_eq: Sequence[Sequence[Fraction]],
             b_eq: Sequence[Fraction]) -> tuple[str, Fraction | None]:
    """Maximize ``cost @ y`` subject to ``a_eq @ y = b_eq`` and ``y >= 0``.

    Returns ``(status, optimum)`` where optimum is ``None`` unless the
    status is ``"optimal"``.
    """
    nvar = len(cost)
    m = len(a_eq)
    tab: list[list[Fraction]] = []
    for i, (row, rhs) in enumerate(zip(a_eq, b_eq)):
        sign = -1 if rhs < 0 else 1
        art = [Fraction(0)] * m
        art[i] = Fraction(1)
        tab.append([sign * Fraction(v) for v in row] + art + [sign * Fraction(rhs)])
    basis = [nvar + i for i in range(m)]
    width = nvar + m + 1

    # phase one: drive the artificial variables to zero
    phase1 = [Fraction(0)] * nvar + [Fraction(-1)] * m
    z = _objective_row(tab, basis, phase1, width)
    _iterate(tab, z, basis, nvar + m)
    if z[-1] < 0:
        return INFEASIBLE, None

    i = 0
    while i < len(tab):
        if basis[i] >= nvar:
            col = next((j for j in range(nvar) if tab[i][j] != 0), None)
            if col is None:
                del tab[i], basis[i]  # redundant row
                continue
            _pivot(tab, z, basis, i, col)
        i += 1

    z = _objective_row(tab, basis, cost, width)
    status = _iterate(tab, z, basis, nvar)
    if status == UNBOUNDED:
        return UNBOUNDED, None
    return OPTIMAL, z[-1]


def feasible_strict(equalities: Sequence[Row], weak: Sequence[Row], strict: Sequence[Row]) -> bool:
    """Whether some real ``x`` has ``e.x = r``, ``w.x <= r`` and ``s.x < r``.

    Strict rows are relaxed to ``s.x + eps <= r`` with ``0 <= eps <= 1`` and
    ``eps`` maximized; the system is strictly feasible iff the optimum is
    positive.
    """
    rows = [*equalities, *weak, *strict]
    if not rows:
        return True
    dim = len(rows[0][0])
    n_weak = len(weak) + len(strict) + 1  # slack per inequality, plus eps <= 1
    # columns: x+ (dim), x- (dim), eps, slacks
    nvar = 2 * dim + 1 + n_weak
    eps = 2 * dim

    a_eq: list[list[Fraction]] = []
    b_eq: list[Fraction] = []

    def add(vec, rhs, eps_coef, slack):
        row = [Fraction(0)] * nvar
        for j, v in enumerate(vec):
            row[j] = Fraction(v)
            row[dim + j] = -Fraction(v)
        row[eps] = Fraction(eps_coef)
        if slack is not None:
            row[2 * dim + 1 + slack] = Fraction(1)
        a_eq.append(row)
        b_eq.append(Fraction(rhs))

    for vec, rhs in equalities:
        add(vec, rhs, 0, None)
    s = 0
    for vec, rhs in weak:
        add(vec, rhs, 0, s)
        s += 1
    for vec, rhs in strict:
        add(vec, rhs, 1, s)
        s += 1
    add([0] * dim, 1, 1, s)

    cost = [Fraction(0)] * nvar
    cost[eps] = Fraction(1)
    status, value = maximize(cost, a_eq, b_eq)
    if status == INFEASIBLE:
        return False
    if status == UNBOUNDED:
        return True
    return value > 0
