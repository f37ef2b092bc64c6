"""Mixed periodic strategies and Nash equilibria of bimatrix games.

A periodic mixture for a player equalizes that player's own expected payoff
across every opponent pure action, so the opponent's choice cannot move it.
Nash equilibria are found by exact support enumeration; degenerate
indifference systems contribute the vertices of their solution segments.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .errors import BadDimension, Infeasible, SizeLimit
from .game import Game, expected_utility, validate_game
from .linalg import affine_dimension, polytope_vertices

Vector = tuple[Fraction, ...]

MAX_SUPPORT_ACTIONS = 6

NASH = "nash"
PERIODIC = "periodic"


@dataclass(frozen=True)
class PeriodicMixed:
    """One player's payoff-equalizing mixture.

    ``dimension`` is the dimension of the full feasible polytope;
    ``probabilities`` is its lexicographically smallest vertex.
    """

    probabilities: Vector
    value: Fraction
    dimension: int


@dataclass(frozen=True)
class EquilibriumReport:
    kind: str
    row_strategy: Vector
    col_strategy: Vector
    utilities: tuple[Fraction, Fraction]
    support: tuple[tuple[int, ...], tuple[int, ...]]


def require_bimatrix(g: Game) -> None:
    validate_game(g)
    if g.num_players != 2:
        raise BadDimension(f"operation requires a 2-player game, got {g.num_players}")


def own_payoff_matrix(g: Game, i: int) -> list[list[Fraction]]:
    """Player i's payoffs as rows indexed by own action, columns by opponent action."""
    rows, cols = g.shape if i == 0 else (g.shape[1], g.shape[0])
    matrix = [[Fraction(0)] * cols for _ in range(rows)]
    for a in range(rows):
        for b in range(cols):
            profile = (a, b) if i == 0 else (b, a)
            matrix[a][b] = g.payoffs[g.profile_index(profile)][i]
    return matrix


def _equalizer_vertices(matrix: Sequence[Sequence[Fraction]]) -> list[Vector]:
    """Vertices of {p on the simplex : p . column is equal for all columns}."""
    n = len(matrix)
    cols = len(matrix[0])
    system = [[Fraction(1)] * n]
    rhs = [Fraction(1)]
    for k in range(1, cols):
        system.append([matrix[a][k] - matrix[a][0] for a in range(n)])
        rhs.append(Fraction(0))
    return polytope_vertices(system, rhs, n)


def periodic_mixed(g: Game, player: Union[int, str]) -> PeriodicMixed:
    """Payoff-equalizing mixture for one player of a bimatrix game.

    Raises Infeasible when no point of the simplex equalizes the player's
    payoff across all opponent pure actions.
    """
    require_bimatrix(g)
    i = g.player_index(player)
    matrix = own_payoff_matrix(g, i)
    vertices = _equalizer_vertices(matrix)
    if not vertices:
        raise Infeasible(
            f"no mixture of player {g.players[i]!r} equalizes payoffs across opponent actions"
        )
    best = vertices[0]
    value = sum(matrix[a][0] * best[a] for a in range(len(best)))
    return PeriodicMixed(probabilities=best, value=value, dimension=affine_dimension(vertices))


def invariance_check(g: Game, player: Union[int, str], p: Sequence[Fraction]) -> Fraction:
    """Spread (max - min over opponent pure actions) of the player's payoff at p.

    Zero certifies that p is a periodic mixture.
    """
    require_bimatrix(g)
    i = g.player_index(player)
    matrix = own_payoff_matrix(g, i)
    if len(p) != len(matrix):
        raise BadDimension(f"mixture length {len(p)} != {len(matrix)} actions")
    payoffs = [
        sum(matrix[a][b] * Fraction(p[a]) for a in range(len(matrix)))
        for b in range(len(matrix[0]))
    ]
    return max(payoffs) - min(payoffs)


def _support(vec: Vector) -> tuple[int, ...]:
    return tuple(a for a, v in enumerate(vec) if v > 0)


def _is_best_response(matrix: Sequence[Sequence[Fraction]], own: Vector, opp: Vector) -> bool:
    """Every own support action must attain the maximal payoff against opp."""
    payoffs = [
        sum(matrix[a][b] * opp[b] for b in range(len(opp))) for a in range(len(own))
    ]
    best = max(payoffs)
    return all(payoffs[a] == best for a in _support(own))


def nash_support_enumeration(g: Game) -> list[EquilibriumReport]:
    """All extreme Nash equilibria of a bimatrix game, canonically sorted.

    For each support pair the exact indifference system is solved on the
    simplex; rank-deficient systems yield every vertex of their solution
    segment. Candidates are kept iff neither player has a profitable pure
    deviation.
    """
    require_bimatrix(g)
    if max(g.shape) > MAX_SUPPORT_ACTIONS:
        raise SizeLimit(f"support enumeration limited to {MAX_SUPPORT_ACTIONS} actions per player")
    m_row = own_payoff_matrix(g, 0)
    m_col = own_payoff_matrix(g, 1)
    n_row, n_col = g.shape

    found: dict[tuple[Vector, Vector], EquilibriumReport] = {}
    row_supports = [
        s for size in range(1, n_row + 1) for s in itertools.combinations(range(n_row), size)
    ]
    col_supports = [
        s for size in range(1, n_col + 1) for s in itertools.combinations(range(n_col), size)
    ]
    for sa in row_supports:
        for sb in col_supports:
            # q makes the row player indifferent across sa; p the column
            # player indifferent across sb.
            q_candidates = _indifference_vertices(m_row, sa, sb, n_col)
            if not q_candidates:
                continue
            p_candidates = _indifference_vertices(m_col, sb, sa, n_row)
            for p in p_candidates:
                for q in q_candidates:
                    key = (p, q)
                    if key in found:
                        continue
                    if not _is_best_response(m_row, p, q):
                        continue
                    if not _is_best_response(m_col, q, p):
                        continue
                    utils = expected_utility(g, (p, q))
                    found[key] = EquilibriumReport(
                        kind=NASH,
                        row_strategy=p,
                        col_strategy=q,
                        utilities=(utils[0], utils[1]),
                        support=(_support(p), _support(q)),
                    )
    return [found[key] for key in sorted(found)]


def _indifference_vertices(
    matrix: Sequence[Sequence[Fraction]],
    own_support: tuple[int, ...],
    opp_support: tuple[int, ...],
    opp_size: int,
) -> list[Vector]:
    """Vertices of opponent mixtures on opp_support equalizing own_support payoffs."""
    system: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    row0 = [Fraction(0)] * opp_size
    for b in opp_support:
        row0[b] = Fraction(1)
    system.append(row0)
    rhs.append(Fraction(1))
    base = own_support[0]
    for a in own_support[1:]:
        row = [Fraction(0)] * opp_size
        for b in opp_support:
            row[b] = matrix[a][b] - matrix[base][b]
        system.append(row)
        rhs.append(Fraction(0))
    # Force zero outside the support.
    for b in range(opp_size):
        if b not in opp_support:
            row = [Fraction(0)] * opp_size
            row[b] = Fraction(1)
            system.append(row)
            rhs.append(Fraction(0))
    return polytope_vertices(system, rhs, opp_size)


def periodic_profile_report(g: Game) -> EquilibriumReport:
    """Joint report when both players admit a periodic mixture."""
    require_bimatrix(g)
    p = periodic_mixed(g, 0)
    q = periodic_mixed(g, 1)
    utils = expected_utility(g, (p.probabilities, q.probabilities))
    return EquilibriumReport(
        kind=PERIODIC,
        row_strategy=p.probabilities,
        col_strategy=q.probabilities,
        utilities=(utils[0], utils[1]),
        support=(_support(p.probabilities), _support(q.probabilities)),
    )
