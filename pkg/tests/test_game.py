from fractions import Fraction

import pytest

from periodic_games import expected_utility, make_game, payoff, pure_profile, restrict_game
from periodic_games.errors import (
    BadDimension,
    DimensionMismatch,
    DuplicateLabel,
    IndexOutOfRange,
    MissingProfile,
    ValidationError,
)
from periodic_games.game import validate_mixed


def small():
    return make_game(
        ["A", "B"],
        [["x", "y"], ["l", "r"]],
        [[(1, 2), (3, 4)], [(5, 6), ("7/2", -1)]],
    )


def test_payoff_lookup():
    g = small()
    assert payoff(g, (0, 0)) == (1, 2)
    assert payoff(g, (1, 1)) == (Fraction(7, 2), -1)


def test_payoffs_are_fractions():
    g = small()
    assert all(isinstance(v, Fraction) for vec in g.payoffs for v in vec)


def test_float_payoff_rejected():
    with pytest.raises(ValidationError):
        make_game(["A", "B"], [["x"], ["l"]], [[(0.5, 1)]])


def test_duplicate_player_label():
    with pytest.raises(DuplicateLabel):
        make_game(["A", "A"], [["x"], ["l"]], [[(0, 0)]])


def test_duplicate_action_label():
    with pytest.raises(DuplicateLabel):
        make_game(["A", "B"], [["x", "x"], ["l"]], [[(0, 0)], [(0, 0)]])


def test_ragged_table_rejected():
    with pytest.raises(MissingProfile):
        make_game(["A", "B"], [["x", "y"], ["l", "r"]], [[(0, 0), (0, 0)]])


def test_wrong_vector_length_rejected():
    with pytest.raises(BadDimension):
        make_game(["A", "B"], [["x"], ["l"]], [[(0, 0, 0)]])


def test_one_player_rejected():
    with pytest.raises(BadDimension):
        make_game(["A"], [["x"]], [(0,)])


def test_label_and_index_access():
    g = small()
    assert g.player_index("B") == 1
    assert g.action_index("A", "y") == 1
    assert g.action_index(1, "r") == 1
    with pytest.raises(IndexOutOfRange):
        g.player_index("C")
    with pytest.raises(IndexOutOfRange):
        g.action_index("A", "r")


def test_expected_utility_pure_matches_payoff():
    g = small()
    for profile in g.profiles():
        assert expected_utility(g, pure_profile(g, profile)) == payoff(g, profile)


def test_expected_utility_mixed():
    g = small()
    half = Fraction(1, 2)
    mixed = ((half, half), (half, half))
    assert expected_utility(g, mixed) == (Fraction(25, 8), Fraction(11, 4))


def test_validate_mixed_rejects_bad_vectors():
    g = small()
    with pytest.raises(ValidationError):
        validate_mixed(g, ((Fraction(2), Fraction(-1)), (Fraction(1), Fraction(0))))
    with pytest.raises(ValidationError):
        validate_mixed(g, ((Fraction(1, 2), Fraction(1, 3)), (Fraction(1), Fraction(0))))
    with pytest.raises(DimensionMismatch):
        validate_mixed(g, ((Fraction(1),),))


def test_restrict_game_keeps_labels_and_payoffs():
    g = small()
    r = restrict_game(g, [[1], [0, 1]])
    assert r.actions == (("y",), ("l", "r"))
    assert payoff(r, (0, 1)) == payoff(g, (1, 1))


def test_restrict_game_rejects_empty_subset():
    with pytest.raises(BadDimension):
        restrict_game(small(), [[], [0]])
