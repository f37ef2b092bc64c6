"""Exact rational simplex and the zero-sum matrix game value.

The pivot rule is Bland's rule, so the solver terminates on degenerate
inputs. Everything is a Fraction; strong duality is verified before any
result is returned.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Vector = tuple[Fraction, ...]


class SimplexInternalError(AssertionError):
    """Strong duality or feasibility check failed; indicates a solver bug."""


def simplex_max(
    a: Sequence[Sequence[Fraction]],
    b: Sequence[Fraction],
    c: Sequence[Fraction],
) -> tuple[Fraction, Vector, Vector]:
    """Maximize c.x subject to a x <= b, x >= 0, with all b >= 0.

    Returns (optimal value, primal x, dual y). The all-slack basis is
    feasible because b >= 0; the objective must be bounded on the feasible
    region (always the case for the game LPs built here).
    """
    m = len(a)
    n = len(c)
    if any(bi < 0 for bi in b):
        raise ValueError("simplex_max requires b >= 0")
    # Tableau: columns = n structural + m slack + rhs; last row = objective.
    tableau = [
        [Fraction(v) for v in a[i]]
        + [Fraction(1) if j == i else Fraction(0) for j in range(m)]
        + [Fraction(b[i])]
        for i in range(m)
    ]
    tableau.append([-Fraction(v) for v in c] + [Fraction(0)] * (m + 1))
    basis = list(range(n, n + m))

    while True:
        obj = tableau[-1]
        entering = next((j for j in range(n + m) if obj[j] < 0), None)
        if entering is None:
            break
        # Ratio test, ties broken by smallest basis variable (Bland).
        leaving = None
        best = None
        for i in range(m):
            coef = tableau[i][entering]
            if coef > 0:
                ratio = tableau[i][-1] / coef
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leaving]):
                    best = ratio
                    leaving = i
        if leaving is None:
            raise SimplexInternalError("objective unbounded")
        pivot = tableau[leaving][entering]
        tableau[leaving] = [v / pivot for v in tableau[leaving]]
        for i in range(m + 1):
            if i != leaving and tableau[i][entering] != 0:
                factor = tableau[i][entering]
                tableau[i] = [v - factor * w for v, w in zip(tableau[i], tableau[leaving])]
        basis[leaving] = entering

    x = [Fraction(0)] * n
    for i, var in enumerate(basis):
        if var < n:
            x[var] = tableau[i][-1]
    y = tuple(tableau[-1][n + i] for i in range(m))
    value = tableau[-1][-1]
    return value, tuple(x), y


def zero_sum_value(matrix: Sequence[Sequence[Fraction]]) -> tuple[Fraction, Vector, Vector]:
    """Exact minimax value of a zero-sum matrix game (row player maximizes).

    Returns (value, optimal row mixture, optimal column mixture). Strong
    duality (row maximin == column minimax) is re-checked against every pure
    response before returning.
    """
    rows = len(matrix)
    if rows == 0 or len(matrix[0]) == 0:
        raise ValueError("empty payoff matrix")
    cols = len(matrix[0])
    if any(len(row) != cols for row in matrix):
        raise ValueError("ragged payoff matrix")
    m = [[Fraction(v) for v in row] for row in matrix]

    # Shift all entries positive so the value is > 0 and the LP below is sound.
    shift = Fraction(1) - min(min(row) for row in m)
    shifted = [[v + shift for v in row] for row in m]

    # Column player's normalized LP: max sum(w) s.t. shifted w <= 1, w >= 0.
    ones = [Fraction(1)] * rows
    total, w, y = simplex_max(shifted, ones, [Fraction(1)] * cols)
    if total <= 0:
        raise SimplexInternalError("normalized LP returned a nonpositive optimum")
    value_shifted = 1 / total
    col_strategy = tuple(wi * value_shifted for wi in w)
    dual_total = sum(y)
    if dual_total != total:
        raise SimplexInternalError("primal and dual optima differ")
    row_strategy = tuple(yi / dual_total for yi in y)
    value = value_shifted - shift

    # Certify: the row mixture guarantees >= value against every column and
    # the column mixture concedes <= value against every row.
    for j in range(cols):
        got = sum(row_strategy[i] * m[i][j] for i in range(rows))
        if got < value:
            raise SimplexInternalError("row strategy fails to guarantee the value")
    for i in range(rows):
        got = sum(m[i][j] * col_strategy[j] for j in range(cols))
        if got > value:
            raise SimplexInternalError("column strategy fails to guarantee the value")
    return value, row_strategy, col_strategy
