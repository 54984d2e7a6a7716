import random
from fractions import Fraction

import pytest

from coxpdiv.errors import DimensionMismatch, Infeasible, Unbounded
from coxpdiv.linprog import LpSolution, solve_lp_min
from coxpdiv.polyhedra import (
    MINUS_INF,
    eval_min,
    polyhedron_from_inequalities,
)


class TestBasics:
    def test_simple_minimum(self):
        sol = solve_lp_min([1, 2], [[1, 1]], [1])
        assert sol.value == 1
        assert sol.point == (Fraction(1), Fraction(0))

    def test_negative_rhs_normalised(self):
        sol = solve_lp_min([1, 0], [[1, -1]], [-2])
        assert sol.value == 0
        assert sol.point == (Fraction(0), Fraction(2))

    def test_fractional_data(self):
        sol = solve_lp_min(
            [Fraction(1, 2), 3], [[Fraction(1, 3), 1]], [Fraction(2, 3)]
        )
        assert sol.value == 1
        assert sol.point == (Fraction(2), Fraction(0))

    def test_infeasible(self):
        with pytest.raises(Infeasible):
            solve_lp_min([1], [[1]], [-1])
        with pytest.raises(Infeasible):
            solve_lp_min([1, 1], [[1, 1], [1, 1]], [1, 2])

    def test_unbounded(self):
        with pytest.raises(Unbounded):
            solve_lp_min([-1, 0], [[0, 1]], [1])

    def test_redundant_rows(self):
        sol = solve_lp_min([1, 1], [[1, 1], [2, 2]], [1, 2])
        assert sol.value == 1

    def test_zero_rows_and_empty_system(self):
        sol = solve_lp_min([2, 1], [], [])
        assert sol.value == 0
        sol = solve_lp_min([1], [[0]], [0])
        assert sol.value == 0

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            solve_lp_min([1, 1], [[1]], [1])

    def test_degenerate_termination(self):
        # highly degenerate system: several tied ratio tests in a row
        sol = solve_lp_min(
            [-Fraction(3, 4), 150, -Fraction(1, 50), 6, 0, 0, 0],
            [
                [Fraction(1, 4), -60, -Fraction(1, 25), 9, 1, 0, 0],
                [Fraction(1, 2), -90, -Fraction(1, 50), 3, 0, 1, 0],
                [0, 0, 1, 0, 0, 0, 1],
            ],
            [0, 0, 1],
        )
        assert isinstance(sol, LpSolution)
        assert sol.value == -Fraction(1, 20)


class TestAgainstPolyhedralOracle:
    @pytest.mark.parametrize("seed", range(40))
    def test_random_problems(self, seed):
        rng = random.Random(300 + seed)
        n = rng.randint(1, 5)
        m = rng.randint(1, 3)
        mat = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(m)]
        rhs = [rng.randint(-3, 3) for _ in range(m)]
        cost = [rng.randint(-3, 3) for _ in range(n)]
        unit = lambda j: tuple(1 if i == j else 0 for i in range(n))
        region = polyhedron_from_inequalities(
            n,
            [(unit(j), 0) for j in range(n)],
            [(tuple(row), b) for row, b in zip(mat, rhs)],
        )
        if region.is_empty:
            with pytest.raises(Infeasible):
                solve_lp_min(cost, mat, rhs)
            return
        expected = eval_min(region, cost)
        if expected is MINUS_INF:
            with pytest.raises(Unbounded):
                solve_lp_min(cost, mat, rhs)
            return
        sol = solve_lp_min(cost, mat, rhs)
        assert sol.value == expected
        # the reported point is feasible and achieves the value
        assert all(x >= 0 for x in sol.point)
        for row, b in zip(mat, rhs):
            assert sum(a * x for a, x in zip(row, sol.point)) == b
        assert sum(c * x for c, x in zip(cost, sol.point)) == sol.value
