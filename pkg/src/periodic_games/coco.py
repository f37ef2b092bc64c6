"""Cooperative-competitive decomposition and solution of bimatrix games.

A bimatrix game splits into a common-payoff half-sum game and a zero-sum
half-difference game. The solution combines the maximal joint payoff with
the zero-sum value and balances the chosen profile with a side payment.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .game import Game
from .lp import zero_sum_value
from .mixed import require_bimatrix

Matrix = tuple[tuple[Fraction, ...], ...]


@dataclass(frozen=True)
class Decomposition:
    cooperative: Matrix  # half-sum, shared by both players
    competitive: Matrix  # half-difference, zero-sum


@dataclass(frozen=True)
class CocoSolution:
    vsharp: Fraction
    vs: Fraction
    profile: tuple[int, int]
    tied_profiles: tuple[tuple[int, int], ...]
    side_payment: Fraction  # paid by the column player to the row player
    final_payoffs: tuple[Fraction, Fraction]
    zero_sum_strategies: tuple[tuple[Fraction, ...], tuple[Fraction, ...]]


def _payoff_matrices(g: Game) -> tuple[list[list[Fraction]], list[list[Fraction]]]:
    rows, cols = g.shape
    a = [[Fraction(0)] * cols for _ in range(rows)]
    b = [[Fraction(0)] * cols for _ in range(rows)]
    for r in range(rows):
        for c in range(cols):
            u = g.payoffs[g.profile_index((r, c))]
            a[r][c], b[r][c] = u[0], u[1]
    return a, b


def decompose(g: Game) -> Decomposition:
    """Entrywise half-sum / half-difference split of the two payoff matrices."""
    require_bimatrix(g)
    a, b = _payoff_matrices(g)
    cooperative = tuple(
        tuple((x + y) / 2 for x, y in zip(ra, rb)) for ra, rb in zip(a, b)
    )
    competitive = tuple(
        tuple((x - y) / 2 for x, y in zip(ra, rb)) for ra, rb in zip(a, b)
    )
    return Decomposition(cooperative=cooperative, competitive=competitive)


def max_combined_payoff(g: Game) -> tuple[Fraction, tuple[int, int], tuple[tuple[int, int], ...]]:
    """Maximum of the joint payoff over pure profiles.

    Returns (value, lexicographically first argmax, all tied argmax profiles).
    """
    require_bimatrix(g)
    a, b = _payoff_matrices(g)
    best = None
    tied: list[tuple[int, int]] = []
    for r in range(g.shape[0]):
        for c in range(g.shape[1]):
            combined = a[r][c] + b[r][c]
            if best is None or combined > best:
                best = combined
                tied = [(r, c)]
            elif combined == best:
                tied.append((r, c))
    return best, tied[0], tuple(tied)


def coco_solution(g: Game) -> CocoSolution:
    """Full cooperative-competitive solution of a bimatrix game."""
    require_bimatrix(g)
    a, _ = _payoff_matrices(g)
    split = decompose(g)
    vsharp, profile, tied = max_combined_payoff(g)
    vs, row_strategy, col_strategy = zero_sum_value(split.competitive)
    final = (vsharp / 2 + vs, vsharp / 2 - vs)
    side_payment = final[0] - a[profile[0]][profile[1]]
    solution = CocoSolution(
        vsharp=vsharp,
        vs=vs,
        profile=profile,
        tied_profiles=tied,
        side_payment=side_payment,
        final_payoffs=final,
        zero_sum_strategies=(row_strategy, col_strategy),
    )
    # Defining identities; cheap and worth re-checking on every call.
    assert sum(final) == vsharp
    b_matrix = _payoff_matrices(g)[1]
    assert b_matrix[profile[0]][profile[1]] - side_payment == final[1]
    return solution
