import json

from periodic_games.cli import main

from conftest import FIXTURES

BOS = str(FIXTURES / "battle_of_sexes.game.json")
PD = str(FIXTURES / "prisoners_dilemma.game.json")
BAYES = str(FIXTURES / "two_type.bayes.json")


def flat_game(tmp_path):
    doc = {
        "players": ["A", "B"],
        "actions": {"A": ["x", "y"], "B": ["l", "r"]},
        "payoffs": [[[0, 0], [0, 0]], [[0, 0], [0, 0]]],
    }
    path = tmp_path / "flat.json"
    path.write_text(json.dumps(doc))
    return str(path)


def test_analyze_text(capsys):
    assert main(["analyze", BOS]) == 0
    out = capsys.readouterr().out
    assert "periodic actions" in out
    assert "A:a1 -> B:b1" in out
    assert "types=2 errors=1" in out


def test_analyze_machine(capsys):
    assert main(["analyze", BOS, "--format", "machine"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["tie_policy"] == "lex"
    assert doc["periodic_actions"] == {"A": ["a1", "a2"], "B": ["b1", "b2"]}
    assert doc["iesds_survivors"] == {"A": ["a1", "a2"], "B": ["b1", "b2"]}
    assert len(doc["cycles"]) == 2
    assert doc["cycles"][0]["types"] == 2


def test_analyze_dot(capsys):
    assert main(["analyze", BOS, "--format", "dot"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("digraph periodicity {")


def test_cycles_through(capsys):
    assert main(["cycles", BOS, "--through", "A:a2"]) == 0
    out = capsys.readouterr().out
    assert "A:a2 -> B:b2" in out
    assert "A:a1" not in out


def test_mixed(capsys):
    assert main(["mixed", BOS, "--format", "machine"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["periodic_mixed"]["A"]["probabilities"] == ["1/3", "2/3"]
    assert doc["periodic_mixed"]["A"]["payoff_spread"] == "0"
    assert doc["joint_expected_utilities"] == ["2/3", "2/3"]


def test_mixed_reports_infeasible_component(capsys):
    path = str(FIXTURES / "four_by_four.game.json")
    assert main(["mixed", path, "--format", "machine"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["periodic_mixed"]["B"] is None
    assert "joint_expected_utilities" not in doc


def test_nash(capsys):
    assert main(["nash", BOS, "--format", "machine"]) == 0
    doc = json.loads(capsys.readouterr().out)
    strategies = {tuple(e["row_strategy"]) for e in doc["equilibria"]}
    assert ("2/3", "1/3") in strategies
    assert len(doc["equilibria"]) == 3


def test_coco(capsys):
    assert main(["coco", PD, "--format", "machine"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["vsharp"] == "8"
    assert doc["side_payment"] == "0"
    assert doc["final_payoffs"] == ["4", "4"]


def test_bayes_ex_ante(capsys):
    assert main(["bayes", BAYES, "--to", "ex-ante"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["actions"]["1"] == ["UU", "UD", "DU", "DD"]
    assert doc["payoffs"][2][1] == ["1/2", "1/2"]


def test_bayes_interim(capsys):
    assert main(["bayes", BAYES, "--to", "interim"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["players"] == ["t1", "t1p", "t2"]


def test_check_is_deterministic(capsys):
    assert main(["check", "--seed", "5", "--count", "3"]) == 0
    first = capsys.readouterr().out
    assert main(["check", "--seed", "5", "--count", "3"]) == 0
    assert capsys.readouterr().out == first
    assert "checked 3 random games" in first


def test_usage_error_exit_code(capsys):
    assert main(["analyze"]) == 1
    assert main(["no-such-command"]) == 1
    capsys.readouterr()


def test_missing_file_exit_code(capsys):
    assert main(["analyze", "/no/such/file.json"]) == 2
    capsys.readouterr()


def test_invalid_document_exit_code(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    assert main(["analyze", str(path)]) == 2
    capsys.readouterr()


def test_strict_tie_policy_exit_code(tmp_path, capsys):
    path = flat_game(tmp_path)
    assert main(["analyze", path, "--tie-policy", "strict"]) == 3
    capsys.readouterr()
    assert main(["analyze", path, "--tie-policy", "lex"]) == 0
    capsys.readouterr()
