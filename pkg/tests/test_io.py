import json
from fractions import Fraction

import pytest

from periodic_games import build_periodicity_graph, enumerate_cycles, export_dot
from periodic_games.errors import ParseError
from periodic_games.io import (
    dump_report,
    format_fraction,
    parse_bayes,
    parse_fraction,
    parse_game,
    serialize_game,
)
from periodic_games.periodicity import Node

from conftest import FIXTURES


def test_parse_fraction():
    assert parse_fraction("1/3") == Fraction(1, 3)
    assert parse_fraction("-7/2") == Fraction(-7, 2)
    assert parse_fraction(4) == Fraction(4)


def test_parse_fraction_rejects_floats_and_bools():
    with pytest.raises(ParseError):
        parse_fraction(0.5)
    with pytest.raises(ParseError):
        parse_fraction(True)
    with pytest.raises(ParseError):
        parse_fraction("1/0")
    with pytest.raises(ParseError):
        parse_fraction("abc")


def test_format_round_trip():
    for text in ("1/3", "-7/2", "0", "12"):
        assert format_fraction(parse_fraction(text)) == text


def test_game_round_trip(bos):
    text = serialize_game(bos)
    again = parse_game(text)
    assert again == bos
    assert serialize_game(again) == text


def test_parse_game_reports_json_position():
    with pytest.raises(ParseError) as info:
        parse_game("{\n  broken\n}")
    assert info.value.line == 2


def test_parse_game_missing_key():
    with pytest.raises(ParseError):
        parse_game(json.dumps({"players": ["A", "B"]}))


def test_parse_game_rejects_float_payoff():
    doc = {
        "players": ["A", "B"],
        "actions": {"A": ["x"], "B": ["l"]},
        "payoffs": [[[0.5, 1]]],
    }
    with pytest.raises(ParseError):
        parse_game(json.dumps(doc))


def test_parse_game_rejects_ragged_payoffs():
    doc = {
        "players": ["A", "B"],
        "actions": {"A": ["x", "y"], "B": ["l"]},
        "payoffs": [[[1, 1]]],
    }
    with pytest.raises(ParseError):
        parse_game(json.dumps(doc))


def test_parse_bayes_round_values(two_type_bayes):
    assert two_type_bayes.prior == {
        (0, (0, 0)): Fraction(1, 2),
        (1, (1, 0)): Fraction(1, 2),
    }
    assert two_type_bayes.thetas == ("th", "thp")


def test_parse_bayes_unknown_type():
    text = (FIXTURES / "two_type.bayes.json").read_text()
    doc = json.loads(text)
    doc["prior"][0][1][0] = "nope"
    with pytest.raises(ParseError):
        parse_bayes(json.dumps(doc))


def test_export_dot_deterministic(bos):
    graph = build_periodicity_graph(bos)
    cycles = enumerate_cycles(graph, Node(0, 0), max_len=4)
    first = export_dot(graph, bos, cycles)
    second = export_dot(graph, bos, cycles)
    assert first == second
    assert first.startswith("digraph periodicity {")
    assert '"A:a1" -> "B:b1"' in first
    assert "color=red" in first


def test_export_dot_marks_degenerate_nodes():
    flat = parse_game(
        json.dumps(
            {
                "players": ["A", "B"],
                "actions": {"A": ["x", "y"], "B": ["l", "r"]},
                "payoffs": [[[0, 0], [0, 0]], [[0, 0], [0, 0]]],
            }
        )
    )
    graph = build_periodicity_graph(flat)
    assert "style=dashed" in export_dot(graph, flat)


def test_dump_report_renders_fractions():
    doc = json.loads(dump_report({"value": Fraction(1, 3), "set": frozenset({2, 1})}))
    assert doc == {"value": "1/3", "set": [1, 2]}
