"""Incomplete-information games with a common prior.

A Bayesian game stores state-dependent payoff tensors plus a prior over
(state, type profile). The module derives interim beliefs and builds the
complete-information companions: the ex-ante game over type-contingent
strategies, the interim game over player-type pairs, and the interim game
with correlated conditioning on joint types.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence, Union

from .errors import BadDimension, SizeLimit, ValidationError, ZeroProbabilityType
from .game import Game, validate_game

TypeProfile = tuple[int, ...]
PriorKey = tuple[int, TypeProfile]  # (theta index, type profile)

DEFAULT_MAX_PROFILES = 100_000


@dataclass(frozen=True)
class BayesianGame:
    players: tuple[str, ...]
    actions: tuple[tuple[str, ...], ...]
    thetas: tuple[str, ...]
    types: tuple[tuple[str, ...], ...]
    prior: Mapping[PriorKey, Fraction]
    # theta index -> dense payoff tensor in row-major action order, entries
    # are length-N utility vectors (same layout as Game.payoffs).
    payoffs: Mapping[int, tuple[tuple[Fraction, ...], ...]]

    @property
    def num_players(self) -> int:
        return len(self.players)

    @property
    def action_shape(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.actions)

    def action_profiles(self):
        return itertools.product(*(range(n) for n in self.action_shape))

    def type_profiles(self):
        return itertools.product(*(range(len(t)) for t in self.types))

    def profile_index(self, profile: Sequence[int]) -> int:
        index = 0
        for size, a in zip(self.action_shape, profile):
            index = index * size + a
        return index

    def player_index(self, player: Union[int, str]) -> int:
        if isinstance(player, str):
            return self.players.index(player)
        return player

    def type_index(self, player: int, t: Union[int, str]) -> int:
        if isinstance(t, str):
            return self.types[player].index(t)
        return t

    def state_payoff(self, theta: int, profile: Sequence[int]) -> tuple[Fraction, ...]:
        return self.payoffs[theta][self.profile_index(profile)]


def validate_bayesian_game(bg: BayesianGame) -> None:
    n = bg.num_players
    if n < 2:
        raise BadDimension(f"a Bayesian game needs at least 2 players, got {n}")
    if len(bg.actions) != n or len(bg.types) != n:
        raise BadDimension("actions and types must be given for every player")
    if not bg.thetas:
        raise BadDimension("at least one parameter value is required")
    total = Fraction(0)
    for (theta, type_profile), prob in bg.prior.items():
        if not 0 <= theta < len(bg.thetas):
            raise ValidationError(f"prior references unknown parameter index {theta}")
        if len(type_profile) != n:
            raise ValidationError(f"prior type profile {type_profile} has wrong length")
        for i, t in enumerate(type_profile):
            if not 0 <= t < len(bg.types[i]):
                raise ValidationError(f"prior references unknown type index {t} of player {i}")
        if prob < 0:
            raise ValidationError("negative prior probability")
        total += prob
    if total != 1:
        raise ValidationError(f"prior sums to {total}, not 1")
    expected = 1
    for size in bg.action_shape:
        expected *= size
    for theta in range(len(bg.thetas)):
        tensor = bg.payoffs.get(theta)
        if tensor is None or len(tensor) != expected:
            raise ValidationError(f"payoff tensor for parameter index {theta} is not dense")
        for vec in tensor:
            if len(vec) != n:
                raise BadDimension("payoff vector length must equal the number of players")


def type_marginal(bg: BayesianGame, player: int, t: int) -> Fraction:
    return sum(
        (prob for (theta, tp), prob in bg.prior.items() if tp[player] == t),
        Fraction(0),
    )


@dataclass(frozen=True)
class InterimBelief:
    """Prior conditioned on one player's type; keys are (theta, opponent types)."""

    player: int
    type: int
    distribution: dict[tuple[int, TypeProfile], Fraction]


def conditional_belief(bg: BayesianGame, player: Union[int, str], t: Union[int, str]) -> InterimBelief:
    i = bg.player_index(player)
    ti = bg.type_index(i, t)
    marginal = type_marginal(bg, i, ti)
    if marginal == 0:
        raise ZeroProbabilityType(
            f"type {bg.types[i][ti]!r} of player {bg.players[i]!r} has zero prior probability"
        )
    dist: dict[tuple[int, TypeProfile], Fraction] = {}
    for (theta, tp), prob in bg.prior.items():
        if tp[i] != ti or prob == 0:
            continue
        opp = tuple(tp[j] for j in range(bg.num_players) if j != i)
        dist[(theta, opp)] = dist.get((theta, opp), Fraction(0)) + prob / marginal
    return InterimBelief(player=i, type=ti, distribution=dist)


def first_order_belief(
    bg: BayesianGame, player: Union[int, str], t: Union[int, str]
) -> dict[int, Fraction]:
    """Marginal of the interim belief onto the parameter set."""
    belief = conditional_belief(bg, player, t)
    out: dict[int, Fraction] = {}
    for (theta, _), prob in belief.distribution.items():
        out[theta] = out.get(theta, Fraction(0)) + prob
    return out


def second_order_belief(
    bg: BayesianGame, player: Union[int, str], t: Union[int, str]
) -> dict[tuple[int, tuple], Fraction]:
    """Interim mass aggregated over opponent first-order-belief classes.

    Keys are (theta, class key) where the class key is the tuple, one entry
    per opponent, of that opponent type's first-order belief rendered as a
    sorted (theta, probability) tuple.
    """
    i = bg.player_index(player)
    belief = conditional_belief(bg, i, t)
    others = [j for j in range(bg.num_players) if j != i]

    def belief_key(j: int, tj: int) -> tuple:
        fob = first_order_belief(bg, j, tj)
        return tuple(sorted(fob.items()))

    out: dict[tuple[int, tuple], Fraction] = {}
    for (theta, opp), prob in belief.distribution.items():
        key = (theta, tuple(belief_key(j, tj) for j, tj in zip(others, opp)))
        out[key] = out.get(key, Fraction(0)) + prob
    return out


def _strategy_label(bg: BayesianGame, player: int, choice: TypeProfile) -> str:
    return "".join(bg.actions[player][a] for a in choice)


def ex_ante_game(bg: BayesianGame, max_profiles: int = DEFAULT_MAX_PROFILES) -> Game:
    """Complete-information game over type-contingent strategies.

    A strategy assigns an action to each of the player's types; its label is
    the concatenation of the chosen action labels in type order. Payoffs are
    prior expectations.
    """
    validate_bayesian_game(bg)
    n = bg.num_players
    strategy_sets = [
        list(itertools.product(range(len(bg.actions[i])), repeat=len(bg.types[i])))
        for i in range(n)
    ]
    total = 1
    for s in strategy_sets:
        total *= len(s)
    if total > max_profiles:
        raise SizeLimit(f"ex-ante game would have {total} profiles (limit {max_profiles})")
    labels = tuple(
        tuple(_strategy_label(bg, i, choice) for choice in strategy_sets[i]) for i in range(n)
    )
    flat: list[tuple[Fraction, ...]] = []
    for joint in itertools.product(*strategy_sets):
        totals = [Fraction(0)] * n
        for (theta, tp), prob in bg.prior.items():
            if prob == 0:
                continue
            action_profile = tuple(joint[i][tp[i]] for i in range(n))
            u = bg.state_payoff(theta, action_profile)
            for i in range(n):
                totals[i] += prob * u[i]
        flat.append(tuple(totals))
    game = Game(players=bg.players, actions=labels, payoffs=tuple(flat))
    validate_game(game)
    return game


def _player_type_ids(bg: BayesianGame) -> tuple[tuple[int, int], ...]:
    return tuple(
        (i, t) for i in range(bg.num_players) for t in range(len(bg.types[i]))
    )


def _player_type_labels(bg: BayesianGame) -> tuple[str, ...]:
    flat_labels = [label for labels in bg.types for label in labels]
    unique = len(set(flat_labels)) == len(flat_labels)
    out = []
    for i, t in _player_type_ids(bg):
        label = bg.types[i][t]
        out.append(label if unique else f"{bg.players[i]}.{label}")
    return tuple(out)


def _type_pair_game(bg: BayesianGame, node_payoff) -> Game:
    """Shared construction for the two interim representations."""
    validate_bayesian_game(bg)
    for i in range(bg.num_players):
        for t in range(len(bg.types[i])):
            if type_marginal(bg, i, t) == 0:
                raise ZeroProbabilityType(
                    f"type {bg.types[i][t]!r} of player {bg.players[i]!r} has zero prior probability"
                )
    ids = _player_type_ids(bg)
    actions = tuple(bg.actions[i] for i, _ in ids)
    flat: list[tuple[Fraction, ...]] = []
    for joint in itertools.product(*(range(len(a)) for a in actions)):
        chosen = {node: joint[k] for k, node in enumerate(ids)}
        flat.append(tuple(node_payoff(node, chosen) for node in ids))
    game = Game(players=_player_type_labels(bg), actions=actions, payoffs=tuple(flat))
    validate_game(game)
    return game


def _realized_profile(
    bg: BayesianGame, node: tuple[int, int], chosen: dict, opp_types: TypeProfile
) -> tuple[int, ...]:
    i, _ = node
    others = [j for j in range(bg.num_players) if j != i]
    profile = [0] * bg.num_players
    profile[i] = chosen[node]
    for j, tj in zip(others, opp_types):
        profile[j] = chosen[(j, tj)]
    return tuple(profile)


def interim_game(bg: BayesianGame) -> Game:
    """Complete-information game whose players are all (player, type) pairs.

    Each pair chooses from the original player's action set; its payoff is
    the type-conditional expectation of the original utility, with opponent
    actions taken from the realized opponent types' choices.
    """

    def node_payoff(node, chosen):
        i, t = node
        belief = conditional_belief(bg, i, t)
        total = Fraction(0)
        for (theta, opp_types), prob in belief.distribution.items():
            profile = _realized_profile(bg, node, chosen, opp_types)
            total += prob * bg.state_payoff(theta, profile)[i]
        return total

    return _type_pair_game(bg, node_payoff)


def interim_correlated_game(bg: BayesianGame) -> Game:
    """Interim representation conditioning on joint type profiles.

    Payoffs are expectations over the parameter conditional on the full type
    profile, averaged over opponent types. With a single type per player
    this collapses to the expected game over the parameter, and the result
    is returned over the original player set.
    """
    if all(len(t) == 1 for t in bg.types):
        validate_bayesian_game(bg)
        flat: list[tuple[Fraction, ...]] = []
        for profile in bg.action_profiles():
            totals = [Fraction(0)] * bg.num_players
            for (theta, _), prob in bg.prior.items():
                if prob == 0:
                    continue
                u = bg.state_payoff(theta, profile)
                for i in range(bg.num_players):
                    totals[i] += prob * u[i]
            flat.append(tuple(totals))
        game = Game(players=bg.players, actions=bg.actions, payoffs=tuple(flat))
        validate_game(game)
        return game

    def node_payoff(node, chosen):
        i, t = node
        belief = conditional_belief(bg, i, t)
        # Split the interim belief into a marginal over opponent types and,
        # per joint type, a conditional over the parameter.
        opp_marginal: dict[TypeProfile, Fraction] = {}
        for (theta, opp_types), prob in belief.distribution.items():
            opp_marginal[opp_types] = opp_marginal.get(opp_types, Fraction(0)) + prob
        total = Fraction(0)
        for opp_types, mass in opp_marginal.items():
            profile = _realized_profile(bg, node, chosen, opp_types)
            for (theta, ot), prob in belief.distribution.items():
                if ot != opp_types:
                    continue
                total += mass * (prob / mass) * bg.state_payoff(theta, profile)[i]
        return total

    return _type_pair_game(bg, node_payoff)
