"""Feasibility engine: worked examples, propagation, and corpus properties."""

import pytest

from varsolve.corpus import check_ilp, enumerate_feasibility, make_rng, random_program
from varsolve.ilp import (Constraint, IntegerProgram, MalformedProgram,
                          ProvenInfeasible, dump_program, propagate_bounds,
                          satisfies, solve_feasibility)


def program(variables, constraints):
    return IntegerProgram(tuple(variables),
                          tuple(Constraint(c, r, b) for c, r, b in constraints))


def test_unique_solution():
    p = program([("x", 0, 2)], [({"x": 3}, "=", 6)])
    assert solve_feasibility(p).values == {"x": 2}


def test_empty_box_against_lower_bound():
    p = program([("x", 0, 0)], [({"x": 1}, ">=", 1)])
    assert solve_feasibility(p) is None


def test_two_value_selection_program():
    # Independent oracle: enumerate x1 in 0..2, x2 in 0..1 for 3*x1+5*x2=11.
    expected = [(x1, x2) for x1 in range(3) for x2 in range(2)
                if 3 * x1 + 5 * x2 == 11]
    assert expected == [(2, 1)]
    p = program([("x1", 0, 2), ("x2", 0, 1)], [({"x1": 3, "x2": 5}, "=", 11)])
    assert solve_feasibility(p).values == {"x1": 2, "x2": 1}


def test_malformed_box_rejected():
    p = program([("x", 3, 1)], [])
    with pytest.raises(MalformedProgram):
        solve_feasibility(p)


def test_undeclared_coefficient_rejected():
    p = program([("x", 0, 1)], [({"y": 1}, "<=", 1)])
    with pytest.raises(MalformedProgram):
        solve_feasibility(p)


def test_empty_program_constant_constraints():
    assert solve_feasibility(program([], [])).values == {}
    assert solve_feasibility(program([], [({}, "=", 0)])) is not None
    assert solve_feasibility(program([], [({}, ">=", 1)])) is None


def test_propagation_tightens_sum():
    p = program([("x", 0, 10), ("y", 0, 10)], [({"x": 1, "y": 1}, "=", 3)])
    tightened = propagate_bounds(p)
    assert tightened.variables == (("x", 0, 3), ("y", 0, 3))


def test_propagation_divisibility_cut():
    p = program([("x", 0, 5)], [({"x": 2}, "=", 7)])
    with pytest.raises(ProvenInfeasible):
        propagate_bounds(p)


def test_propagation_fixpoint_pins_both_variables():
    # Hand-checkable: the only point of [0,4]^2 with x-y=0 and x+y=8 is (4,4).
    points = [(x, y) for x in range(5) for y in range(5)
              if x - y == 0 and x + y == 8]
    assert points == [(4, 4)]
    p = program([("x", 0, 4), ("y", 0, 4)],
                [({"x": 1, "y": -1}, "=", 0), ({"x": 1, "y": 1}, "=", 8)])
    tightened = propagate_bounds(p)
    assert tightened.variables == (("x", 4, 4), ("y", 4, 4))


def test_propagation_never_removes_solutions():
    rng = make_rng(7)
    for _ in range(200):
        p = random_program(rng)
        try:
            tightened = propagate_bounds(p)
        except ProvenInfeasible:
            assert enumerate_feasibility(p) is None
            continue
        boxes = {name: (lo, hi) for name, lo, hi in tightened.variables}
        point = enumerate_feasibility(p)
        if point is not None:
            for name, value in point.items():
                lo, hi = boxes[name]
                assert lo <= value <= hi
        # Same feasible verdict after tightening.
        assert (enumerate_feasibility(tightened) is None) == (point is None)


def test_corpus_soundness_and_completeness():
    assert check_ilp(42, 1000) == 1000


def test_determinism():
    rng = make_rng(11)
    for _ in range(50):
        p = random_program(rng)
        first = solve_feasibility(p)
        second = solve_feasibility(p)
        if first is None:
            assert second is None
        else:
            assert first.values == second.values
            assert satisfies(p, first.values)


def test_dump_format():
    p = program([("x1", 0, 2), ("x2", 0, 1)], [({"x1": 3, "x2": 5}, "<=", 11)])
    assert dump_program(p).splitlines() == [
        "0 <= x1 <= 2",
        "0 <= x2 <= 1",
        "3*x1 + 5*x2 <= 11",
    ]
