from fractions import Fraction as F

from hypothesis import given, settings
from hypothesis import strategies as st

from lexgkz import lp_feasible_strict
from lexgkz.simplex import INFEASIBLE, OPTIMAL, UNBOUNDED, maximize
from oracles import fm_feasible


def test_empty_system():
    assert lp_feasible_strict([], [], [])


def test_contradictory_strict_pair():
    assert not lp_feasible_strict([], [], [((1,), 0), ((-1,), 0)])


def test_strict_box_on_a_line():
    # (1/2, 1/2) satisfies everything
    x = (F(1, 2), F(1, 2))
    assert x[0] + x[1] == 1 and x[0] < 1 and x[1] < 1
    assert lp_feasible_strict([((1, 1), 1)], [], [((1, 0), 1), ((0, 1), 1)])


def test_weak_pair_touching():
    assert lp_feasible_strict([], [((1,), 0), ((-1,), 0)], [])
    assert not lp_feasible_strict([], [((1,), 0)], [((-1,), 0)])


def test_inconsistent_equalities():
    assert not lp_feasible_strict([((1, 1), 1), ((1, 1), 2)], [], [])


def test_redundant_equalities():
    assert lp_feasible_strict([((1, 1), 1), ((2, 2), 2)], [], [((1, 0), 0)])


def test_maximize_statuses():
    # max x  s.t. x + s = 3
    assert maximize([1, 0], [[1, 1]], [3]) == (OPTIMAL, 3)
    # max x  s.t. x - s = 3
    assert maximize([1, 0], [[1, -1]], [3])[0] == UNBOUNDED
    # x + s = -1 with x, s >= 0
    assert maximize([1, 0], [[1, 1]], [-1])[0] == INFEASIBLE


small = st.integers(-3, 3)


def rows(nvar, max_rows):
    return st.lists(st.tuples(st.lists(small, min_size=nvar, max_size=nvar), small), max_size=max_rows)


@settings(max_examples=300, deadline=None)
@given(st.integers(1, 3).flatmap(lambda n: st.tuples(rows(n, 2), rows(n, 4), rows(n, 4))))
def test_agrees_with_fourier_motzkin(system):
    eq, weak, strict = system
    assert lp_feasible_strict(eq, weak, strict) == fm_feasible(eq, weak, strict)
