import itertools
import pathlib
import random
import sys
from fractions import Fraction

import pytest

from periodic_games import make_game
from periodic_games.io import parse_bayes, parse_game

FIXTURES = pathlib.Path(__file__).parent / "fixtures"


def pytest_runtest_logreport(report):
    """One explicit pass/fail line per acceptance gate test."""
    if report.when != "call" or "test_acceptance" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    status = "PASS" if report.passed else "FAIL"
    sys.stderr.write(f"\n{name}: {status}\n")


def load_game(name):
    return parse_game((FIXTURES / name).read_text())


def load_bayes(name):
    return parse_bayes((FIXTURES / name).read_text())


@pytest.fixture
def coordination():
    return load_game("coordination_2x2.game.json")


@pytest.fixture
def bos():
    return load_game("battle_of_sexes.game.json")


@pytest.fixture
def prisoners():
    return load_game("prisoners_dilemma.game.json")


@pytest.fixture
def four_by_four():
    return load_game("four_by_four.game.json")


@pytest.fixture
def two_type_bayes():
    return load_bayes("two_type.bayes.json")


@pytest.fixture
def matching_bayes():
    return load_bayes("matching.bayes.json")


def random_game(rng: random.Random, num_players=None, max_actions=4):
    """Random integer-payoff game, payoffs uniform in [-9, 9]."""
    n = num_players if num_players is not None else rng.randint(2, 4)
    shape = [rng.randint(2, max_actions) for _ in range(n)]
    players = [f"P{i + 1}" for i in range(n)]
    actions = [[f"s{k + 1}" for k in range(size)] for size in shape]

    def table(depth):
        if depth == n:
            return [Fraction(rng.randint(-9, 9)) for _ in range(n)]
        return [table(depth + 1) for _ in range(shape[depth])]

    return make_game(players, actions, table(0))


def brute_force_deviation(g, i, a):
    """Independent argmax over opponent profiles, first maximizer in lex order."""
    others = [j for j in range(g.num_players) if j != i]
    best_value = None
    best = None
    for opp in itertools.product(*(range(g.shape[j]) for j in others)):
        profile = [0] * g.num_players
        profile[i] = a
        for j, b in zip(others, opp):
            profile[j] = b
        value = g.payoffs[g.profile_index(profile)][i]
        if best_value is None or value > best_value:
            best_value = value
            best = opp
    return dict(zip(others, best))
