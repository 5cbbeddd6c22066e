"""Cross-checks between the three lattice-point counting routes."""
from fractions import Fraction

import pytest

from trivalent.catalog import claw, dumbbell, k4, lollipop, theta, tree_two_internal
from trivalent.counting import (
    count_backtracking,
    count_elimination,
    count_points,
    count_tree_dp,
    iter_lattice_points,
)
from trivalent.polytope import contains, inequality_system


def test_claw_small_values():
    g = claw()
    assert count_points(g, 0) == 1
    assert count_points(g, 1) == 1
    assert count_points(g, 2) == 4
    assert count_points(g, 3) == 5
    assert count_points(g, Fraction(5, 2)) == 4


def test_theta_small_values():
    counts = [count_points(theta(), t) for t in range(7)]
    assert counts == [1, 1, 4, 5, 11, 14, 24]


@pytest.mark.parametrize("g", [claw(), theta(), dumbbell(), lollipop(), tree_two_internal()])
def test_routes_agree_integer_t(g):
    sys = inequality_system(g)
    for t in range(6):
        expect = count_backtracking(sys, t)
        assert count_elimination(g, t) == expect
        if g.is_tree():
            assert count_tree_dp(g, t) == expect


@pytest.mark.parametrize("t", [Fraction(1, 2), Fraction(5, 4), Fraction(7, 3), Fraction(10, 3)])
def test_routes_agree_rational_t(t):
    for g in (claw(), theta(), dumbbell()):
        sys = inequality_system(g)
        expect = count_backtracking(sys, t)
        assert count_elimination(g, t) == expect
        if g.is_tree():
            assert count_tree_dp(g, t) == expect


def test_strict_counting():
    g = claw()
    sys = inequality_system(g)
    # open polytope at t=3 drops boundary points of the closed one
    assert count_backtracking(sys, 3, strict=True) <= count_backtracking(sys, 3)
    assert count_backtracking(sys, 3, strict=True) == count_elimination(
        g, 3, strict=True
    )


def test_iter_lattice_points_matches_membership():
    g = theta()
    sys = inequality_system(g)
    pts = list(iter_lattice_points(sys, 4))
    assert len(pts) == len(set(pts)) == count_backtracking(sys, 4)
    assert all(contains(sys, p, 4) for p in pts)
    assert pts == sorted(pts)  # deterministic lexicographic order


def test_elimination_reflexive_kind():
    # reflexive-candidate body of the claw at t=1 contains 11 lattice points
    assert count_elimination(claw(), 1, kind="reflexive") == 11
    assert count_elimination(claw(), 0, kind="reflexive") == 1
    # interior counts at t+1 reproduce closed counts at t for a reflexive body
    assert count_elimination(claw(), 2, kind="reflexive", strict=True) == 11


def test_k4_counts():
    assert [count_points(k4(), t) for t in range(5)] == [1, 1, 8, 15, 49]
