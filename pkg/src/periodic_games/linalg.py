"""Exact linear algebra helpers over Fractions.

Desk-scale only: systems here have at most a handful of variables, so plain
Gaussian elimination and subset-based vertex enumeration are the right tools.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Optional, Sequence

Matrix = list[list[Fraction]]
Vector = tuple[Fraction, ...]


def rref(matrix: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form; returns (rref matrix, pivot column list)."""
    m = [row[:] for row in matrix]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        pivot_row = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        inv = m[r][c]
        m[r] = [v / inv for v in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                factor = m[i][c]
                m[i] = [a - factor * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def solve_exact(a: Sequence[Sequence[Fraction]], b: Sequence[Fraction]) -> tuple[str, Optional[Vector]]:
    """Solve ``a x = b`` exactly.

    Returns ('unique', x), ('none', None) for inconsistent systems, or
    ('many', particular_solution) when underdetermined.
    """
    n = len(a[0]) if a else 0
    aug = [list(row) + [rhs] for row, rhs in zip(a, b)]
    if not aug:
        return ("many", tuple(Fraction(0) for _ in range(n)))
    reduced, pivots = rref(aug)
    for row in reduced:
        if all(v == 0 for v in row[:-1]) and row[-1] != 0:
            return ("none", None)
    if n in pivots:
        return ("none", None)  # pivot in augmented column
    x = [Fraction(0)] * n
    for r, c in enumerate(pivots):
        x[c] = reduced[r][-1]
    kind = "unique" if len(pivots) == n else "many"
    return (kind, tuple(x))


def matrix_rank(a: Sequence[Sequence[Fraction]]) -> int:
    if not a:
        return 0
    _, pivots = rref([list(row) for row in a])
    return len(pivots)


def polytope_vertices(
    a: Sequence[Sequence[Fraction]], b: Sequence[Fraction], n: int
) -> list[Vector]:
    """All vertices of {x in R^n : a x = b, x >= 0}, sorted lexicographically.

    Enumerates support subsets; a support yields a vertex iff the restricted
    system has a unique nonnegative solution. Intended for n <= ~8.
    """
    vertices: set[Vector] = set()
    for size in range(1, n + 1):
        for support in itertools.combinations(range(n), size):
            sub = [[row[j] for j in support] for row in a]
            kind, sol = solve_exact(sub, b)
            if kind != "unique" or sol is None:
                continue
            if any(v < 0 for v in sol):
                continue
            full = [Fraction(0)] * n
            for j, v in zip(support, sol):
                full[j] = v
            vertices.add(tuple(full))
    return sorted(vertices)


def affine_dimension(points: Sequence[Vector]) -> int:
    """Dimension of the affine hull of a point set (-1 for the empty set)."""
    if not points:
        return -1
    base = points[0]
    diffs = [[p[j] - base[j] for j in range(len(base))] for p in points[1:]]
    if not diffs:
        return 0
    return matrix_rank(diffs)
