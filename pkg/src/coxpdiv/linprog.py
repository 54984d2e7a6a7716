"""Exact linear programming over the rationals.

A two-phase primal simplex on dense Fraction tableaus.  Pivoting follows
Bland's rule (first eligible column, lowest basis index on ties), which
guarantees termination and makes every run deterministic.  Problems are
given in standard equality form: minimise c.x subject to A.x = b, x >= 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DimensionMismatch, Infeasible, Unbounded


@dataclass(frozen=True)
class LpSolution:
    value: Fraction
    point: tuple[Fraction, ...]


def _pivot(tab: list[list[Fraction]], obj: list[Fraction], basis: list[int], row: int, col: int) -> None:
    inv = 1 / tab[row][col]
    tab[row] = [x * inv for x in tab[row]]
    for i in range(len(tab)):
        if i != row and tab[i][col] != 0:
            f = tab[i][col]
            tab[i] = [x - f * y for x, y in zip(tab[i], tab[row])]
    if obj[col] != 0:
        f = obj[col]
        obj[:] = [x - f * y for x, y in zip(obj, tab[row])]
    basis[row] = col


def _run(tab: list[list[Fraction]], obj: list[Fraction], basis: list[int]) -> None:
    while True:
        col = next((j for j in range(len(obj) - 1) if obj[j] < 0), None)
        if col is None:
            return
        row = None
        ratio = None
        for i in range(len(tab)):
            if tab[i][col] > 0:
                r = tab[i][-1] / tab[i][col]
                if ratio is None or r < ratio or (r == ratio and basis[i] < basis[row]):
                    row, ratio = i, r
        if row is None:
            raise Unbounded("objective decreases without bound")
        _pivot(tab, obj, basis, row, col)


def solve_lp_min(
    objective: Sequence, eq_matrix: Sequence[Sequence], eq_rhs: Sequence
) -> LpSolution:
    """Minimise objective.x over {x >= 0 : eq_matrix.x = eq_rhs}.

    Raises Infeasible when the feasible region is empty and Unbounded when
    the minimum does not exist.
    """
    n = len(objective)
    m = len(eq_matrix)
    if len(eq_rhs) != m or any(len(row) != n for row in eq_matrix):
        raise DimensionMismatch("objective, matrix and right-hand side disagree")
    cost = [Fraction(x) for x in objective]
    rows = [[Fraction(x) for x in row] for row in eq_matrix]
    rhs = [Fraction(x) for x in eq_rhs]
    for i in range(m):
        if rhs[i] < 0:
            rows[i] = [-x for x in rows[i]]
            rhs[i] = -rhs[i]

    # phase one: artificial basis, minimise the sum of artificial variables
    tab = [rows[i] + [Fraction(1 if j == i else 0) for j in range(m)] + [rhs[i]] for i in range(m)]
    basis = [n + i for i in range(m)]
    obj = [Fraction(0)] * (n + m + 1)
    for j in range(n):
        obj[j] = -sum(tab[i][j] for i in range(m))
    obj[-1] = -sum(rhs)
    _run(tab, obj, basis)
    if -obj[-1] != 0:
        raise Infeasible("equality system has no nonnegative solution")

    # drive leftover artificial variables out of the basis, drop redundant rows
    keep = []
    for i in range(m):
        if basis[i] < n:
            keep.append(i)
            continue
        col = next((j for j in range(n) if tab[i][j] != 0), None)
        if col is None:
            continue  # redundant constraint
        _pivot(tab, obj, basis, i, col)
        keep.append(i)
    tab = [tab[i][:n] + [tab[i][-1]] for i in keep]
    basis = [basis[i] for i in keep]

    # phase two: reduced costs of the original objective over the current basis
    # (basis columns are unit columns, so one pass with the original costs suffices)
    obj = list(cost) + [Fraction(0)]
    for i, b in enumerate(basis):
        f = cost[b]
        if f != 0:
            obj = [x - f * y for x, y in zip(obj, tab[i])]
    _run(tab, obj, basis)

    point = [Fraction(0)] * n
    for i, b in enumerate(basis):
        point[b] = tab[i][-1]
    value = sum(c * x for c, x in zip(cost, point))
    return LpSolution(value, tuple(point))
