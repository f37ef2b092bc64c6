"""Finite N-player strategic form games with exact rational payoffs.

Payoffs are stored as a dense tensor in row-major player order; every
quantity is a ``fractions.Fraction`` so all downstream computation is exact.
Game objects are immutable and safe to share between threads.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence, Union

from .errors import (
    BadDimension,
    DimensionMismatch,
    DuplicateLabel,
    IndexOutOfRange,
    MissingProfile,
    ValidationError,
)

Profile = tuple[int, ...]
MixedProfile = tuple[tuple[Fraction, ...], ...]

RationalLike = Union[int, str, Fraction]


def as_fraction(value: RationalLike) -> Fraction:
    """Convert an exact representation (int, Fraction, or string) to Fraction.

    Floats are rejected: binary floats would silently break exactness.
    """
    if isinstance(value, float):
        raise ValidationError(f"float payoff {value!r} rejected; use a string or Fraction")
    return Fraction(value)


@dataclass(frozen=True)
class Game:
    """An N-player strategic form game.

    ``payoffs[k]`` is the length-N utility vector of the k-th action profile,
    profiles enumerated in row-major order over the players' action indices.
    """

    players: tuple[str, ...]
    actions: tuple[tuple[str, ...], ...]
    payoffs: tuple[tuple[Fraction, ...], ...]

    @property
    def num_players(self) -> int:
        return len(self.players)

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(acts) for acts in self.actions)

    def profiles(self) -> Iterator[Profile]:
        return itertools.product(*(range(n) for n in self.shape))

    def profile_index(self, profile: Sequence[int]) -> int:
        index = 0
        for size, a in zip(self.shape, profile):
            if not 0 <= a < size:
                raise IndexOutOfRange(f"action index {a} out of range for size {size}")
            index = index * size + a
        return index

    def player_index(self, player: Union[int, str]) -> int:
        if isinstance(player, str):
            try:
                return self.players.index(player)
            except ValueError:
                raise IndexOutOfRange(f"unknown player {player!r}") from None
        if not 0 <= player < self.num_players:
            raise IndexOutOfRange(f"player index {player} out of range")
        return player

    def action_index(self, player: Union[int, str], action: Union[int, str]) -> int:
        i = self.player_index(player)
        if isinstance(action, str):
            try:
                return self.actions[i].index(action)
            except ValueError:
                raise IndexOutOfRange(f"unknown action {action!r} for player {self.players[i]!r}") from None
        if not 0 <= action < self.shape[i]:
            raise IndexOutOfRange(f"action index {action} out of range for player {self.players[i]!r}")
        return action


def make_game(
    players: Sequence[str],
    actions: Sequence[Sequence[str]],
    payoff_table,
) -> Game:
    """Build and validate a Game from a nested payoff table.

    ``payoff_table`` is nested one level per player (row-major), the innermost
    entries being length-N sequences of exact values.
    """
    players = tuple(players)
    actions = tuple(tuple(a) for a in actions)
    n = len(players)
    if len(actions) != n:
        raise BadDimension(f"{len(actions)} action lists for {n} players")
    shape = tuple(len(a) for a in actions)

    flat: list[tuple[Fraction, ...]] = []

    def walk(node, depth: int, path: tuple[int, ...]) -> None:
        if depth == n:
            if not isinstance(node, (list, tuple)) or len(node) != n:
                raise BadDimension(f"payoff vector at profile {path} must have length {n}")
            flat.append(tuple(as_fraction(v) for v in node))
            return
        if not isinstance(node, (list, tuple)):
            raise MissingProfile(f"expected {shape[depth]} entries at depth {depth}, profile prefix {path}")
        if len(node) != shape[depth]:
            raise MissingProfile(
                f"player {players[depth]!r} axis has {len(node)} entries, expected {shape[depth]}"
            )
        for k, child in enumerate(node):
            walk(child, depth + 1, path + (k,))

    walk(payoff_table, 0, ())
    game = Game(players=players, actions=actions, payoffs=tuple(flat))
    validate_game(game)
    return game


def validate_game(g: Game) -> None:
    """Check all Game invariants; raises a ValidationError subclass on failure."""
    n = g.num_players
    if n < 2:
        raise BadDimension(f"a game needs at least 2 players, got {n}")
    if len(g.actions) != n:
        raise BadDimension(f"{len(g.actions)} action lists for {n} players")
    if len(set(g.players)) != n:
        raise DuplicateLabel("player ids must be unique")
    for i, acts in enumerate(g.actions):
        if len(acts) < 1:
            raise BadDimension(f"player {g.players[i]!r} has an empty action set")
        if len(set(acts)) != len(acts):
            raise DuplicateLabel(f"duplicate action label for player {g.players[i]!r}")
    expected = 1
    for size in g.shape:
        expected *= size
    if len(g.payoffs) != expected:
        raise MissingProfile(f"payoff tensor has {len(g.payoffs)} profiles, expected {expected}")
    for k, vec in enumerate(g.payoffs):
        if len(vec) != n:
            raise BadDimension(f"payoff vector at flat index {k} has length {len(vec)}, expected {n}")


def payoff(g: Game, profile: Sequence[int]) -> tuple[Fraction, ...]:
    """Utility vector of a pure action profile."""
    if len(profile) != g.num_players:
        raise IndexOutOfRange(f"profile length {len(profile)} != {g.num_players} players")
    return g.payoffs[g.profile_index(profile)]


def validate_mixed(g: Game, mixed: MixedProfile) -> None:
    if len(mixed) != g.num_players:
        raise DimensionMismatch(f"{len(mixed)} mixture vectors for {g.num_players} players")
    for i, vec in enumerate(mixed):
        if len(vec) != g.shape[i]:
            raise DimensionMismatch(
                f"player {g.players[i]!r} mixture has {len(vec)} entries, expected {g.shape[i]}"
            )
        if any(p < 0 for p in vec):
            raise ValidationError(f"negative probability in mixture of player {g.players[i]!r}")
        if sum(vec) != 1:
            raise ValidationError(f"mixture of player {g.players[i]!r} sums to {sum(vec)}, not 1")


def expected_utility(g: Game, mixed: MixedProfile) -> tuple[Fraction, ...]:
    """Exact expected utility vector of an independent mixed profile."""
    validate_mixed(g, mixed)
    totals = [Fraction(0)] * g.num_players
    for profile in g.profiles():
        prob = Fraction(1)
        for vec, a in zip(mixed, profile):
            prob *= vec[a]
            if prob == 0:
                break
        if prob == 0:
            continue
        vec_u = g.payoffs[g.profile_index(profile)]
        for i in range(g.num_players):
            totals[i] += prob * vec_u[i]
    return tuple(totals)


def pure_profile(g: Game, profile: Sequence[int]) -> MixedProfile:
    """Degenerate mixed profile with all mass on one pure profile."""
    return tuple(
        tuple(Fraction(1) if a == profile[i] else Fraction(0) for a in range(g.shape[i]))
        for i in range(g.num_players)
    )


def restrict_game(g: Game, keep: Sequence[Iterable[int]]) -> Game:
    """Subgame on the given per-player action-index subsets (labels preserved)."""
    if len(keep) != g.num_players:
        raise DimensionMismatch(f"{len(keep)} subsets for {g.num_players} players")
    kept = [sorted(set(k)) for k in keep]
    for i, ks in enumerate(kept):
        if not ks:
            raise BadDimension(f"empty restriction for player {g.players[i]!r}")
        for a in ks:
            g.action_index(i, a)
    actions = tuple(tuple(g.actions[i][a] for a in ks) for i, ks in enumerate(kept))
    flat = []
    for sub_profile in itertools.product(*kept):
        flat.append(g.payoffs[g.profile_index(sub_profile)])
    return Game(players=g.players, actions=actions, payoffs=tuple(flat))
