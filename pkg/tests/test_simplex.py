import pytest

from buyhold import Infeasible, Unbounded
from buyhold.simplex import EQ, GE, LE, solve_lp


def test_ge_pair():
    # Both constraints tight at the optimum x = (2/3, 2/3).
    x, obj = solve_lp([1.0, 1.0], [[1.0, 2.0], [2.0, 1.0]], [2.0, 2.0], [GE, GE])
    assert obj == pytest.approx(4.0 / 3.0, abs=1e-10)
    assert x == pytest.approx([2.0 / 3.0, 2.0 / 3.0], abs=1e-10)


def test_maximization_via_negation():
    y, obj = solve_lp([-1.0, -1.0], [[1.0, 0.5], [0.5, 1.0]], [1.0, 1.0], [LE, LE])
    assert -obj == pytest.approx(4.0 / 3.0, abs=1e-10)
    assert y == pytest.approx([2.0 / 3.0, 2.0 / 3.0], abs=1e-10)


def test_equality_constraint():
    x, obj = solve_lp([1.0, 2.0], [[1.0, 1.0]], [1.0], [EQ])
    assert x == pytest.approx([1.0, 0.0], abs=1e-12)
    assert obj == pytest.approx(1.0, abs=1e-12)


def test_negative_rhs_normalized():
    # -x <= -1 is x >= 1.
    x, obj = solve_lp([1.0], [[-1.0]], [-1.0], [LE])
    assert x == pytest.approx([1.0], abs=1e-12)
    assert obj == pytest.approx(1.0, abs=1e-12)


def test_infeasible():
    with pytest.raises(Infeasible):
        solve_lp([1.0], [[1.0], [1.0]], [1.0, 3.0], [LE, GE])


def test_unbounded():
    with pytest.raises(Unbounded):
        solve_lp([-1.0], [[1.0]], [1.0], [GE])


def test_degenerate_instance_terminates():
    # A classic degenerate program on which most-negative pivoting
    # cycles forever; Bland's rule must reach the optimum -0.05.
    c = [-0.75, 150.0, -0.02, 6.0]
    A = [
        [0.25, -60.0, -0.04, 9.0],
        [0.5, -90.0, -0.02, 3.0],
        [0.0, 0.0, 1.0, 0.0],
    ]
    _, obj = solve_lp(c, A, [0.0, 0.0, 1.0], [LE, LE, LE])
    assert obj == pytest.approx(-0.05, abs=1e-10)


def test_dimension_validation():
    with pytest.raises(ValueError):
        solve_lp([1.0], [[1.0, 2.0]], [1.0], [LE])
    with pytest.raises(ValueError):
        solve_lp([1.0], [[1.0]], [1.0], ["<"])
