"""Game and Bayesian-game file formats, DOT export, and report documents.

Files are JSON with payoffs written as strings ("3", "-1/2", "0.25") so
fractions survive the round trip exactly. Serialization is deterministic:
identical inputs produce byte-identical output.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .bayes import BayesianGame, validate_bayesian_game
from .errors import ParseError, ValidationError
from .game import Game, validate_game
from .periodicity import Cycle, Node, PeriodicityGraph


def parse_fraction(token: Union[int, str]) -> Fraction:
    if isinstance(token, bool) or isinstance(token, float):
        raise ParseError(f"payoff entries must be integers or strings, got {token!r}")
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad rational literal {token!r}: {exc}") from None


def format_fraction(value: Fraction) -> str:
    return str(value)


def _load_json(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno, column=exc.colno) from None
    if not isinstance(doc, dict):
        raise ParseError("top-level document must be an object")
    return doc


def _require(doc: dict, key: str):
    if key not in doc:
        raise ParseError(f"missing required key {key!r}")
    return doc[key]


def _parse_actions(doc: dict, players: Sequence[str]) -> tuple[tuple[str, ...], ...]:
    actions_doc = _require(doc, "actions")
    if not isinstance(actions_doc, dict):
        raise ParseError("'actions' must map player names to label lists")
    out = []
    for p in players:
        if p not in actions_doc:
            raise ParseError(f"no action list for player {p!r}")
        out.append(tuple(str(a) for a in actions_doc[p]))
    return tuple(out)


def _parse_tensor(node, shape: Sequence[int], n: int, path=()) -> list:
    """Nested payoff arrays to a flat row-major list of payoff vectors."""
    if not shape:
        if not isinstance(node, list) or len(node) != n:
            raise ParseError(f"payoff vector at {path} must be a list of {n} entries")
        return [tuple(parse_fraction(v) for v in node)]
    if not isinstance(node, list) or len(node) != shape[0]:
        raise ParseError(f"expected {shape[0]} entries at {path or 'payoffs root'}")
    flat = []
    for k, child in enumerate(node):
        flat.extend(_parse_tensor(child, shape[1:], n, path + (k,)))
    return flat


def parse_game(text: str) -> Game:
    """Parse and validate a game document."""
    doc = _load_json(text)
    players = tuple(str(p) for p in _require(doc, "players"))
    actions = _parse_actions(doc, players)
    shape = [len(a) for a in actions]
    flat = _parse_tensor(_require(doc, "payoffs"), shape, len(players))
    game = Game(players=players, actions=actions, payoffs=tuple(flat))
    validate_game(game)
    return game


def _tensor_doc(g: Game) -> list:
    def build(prefix: tuple[int, ...]):
        depth = len(prefix)
        if depth == g.num_players:
            return [format_fraction(v) for v in g.payoffs[g.profile_index(prefix)]]
        return [build(prefix + (k,)) for k in range(g.shape[depth])]

    return build(())


def serialize_game(g: Game) -> str:
    doc = {
        "players": list(g.players),
        "actions": {p: list(acts) for p, acts in zip(g.players, g.actions)},
        "payoffs": _tensor_doc(g),
    }
    return json.dumps(doc, indent=2) + "\n"


def parse_bayes(text: str) -> BayesianGame:
    """Parse and validate a Bayesian game document."""
    doc = _load_json(text)
    players = tuple(str(p) for p in _require(doc, "players"))
    actions = _parse_actions(doc, players)
    thetas = tuple(str(t) for t in _require(doc, "thetas"))
    types_doc = _require(doc, "types")
    if not isinstance(types_doc, dict):
        raise ParseError("'types' must map player names to type label lists")
    types = []
    for p in players:
        if p not in types_doc:
            raise ParseError(f"no type list for player {p!r}")
        types.append(tuple(str(t) for t in types_doc[p]))
    types = tuple(types)

    prior: dict[tuple[int, tuple[int, ...]], Fraction] = {}
    for entry in _require(doc, "prior"):
        if not isinstance(entry, list) or len(entry) != 3:
            raise ParseError(f"prior entries are [theta, [types...], probability], got {entry!r}")
        theta_label, type_labels, prob = entry
        if theta_label not in thetas:
            raise ParseError(f"unknown parameter label {theta_label!r}")
        theta = thetas.index(theta_label)
        if len(type_labels) != len(players):
            raise ParseError(f"type profile {type_labels!r} must name one type per player")
        tp = []
        for i, label in enumerate(type_labels):
            if label not in types[i]:
                raise ParseError(f"unknown type {label!r} for player {players[i]!r}")
            tp.append(types[i].index(label))
        key = (theta, tuple(tp))
        prior[key] = prior.get(key, Fraction(0)) + parse_fraction(prob)

    payoffs_doc = _require(doc, "payoffs")
    if not isinstance(payoffs_doc, dict):
        raise ParseError("'payoffs' must map parameter labels to payoff tables")
    shape = [len(a) for a in actions]
    payoffs = {}
    for theta, label in enumerate(thetas):
        if label not in payoffs_doc:
            raise ParseError(f"no payoff table for parameter {label!r}")
        payoffs[theta] = tuple(_parse_tensor(payoffs_doc[label], shape, len(players)))

    bg = BayesianGame(
        players=players,
        actions=actions,
        thetas=thetas,
        types=types,
        prior=prior,
        payoffs=payoffs,
    )
    validate_bayesian_game(bg)
    return bg


def node_id(g: Game, node: Node) -> str:
    return f"{g.players[node.player]}:{g.actions[node.player][node.action]}"


def export_dot(
    graph: PeriodicityGraph, g: Game, highlight: Iterable[Cycle] = ()
) -> str:
    """Deterministic DOT rendering; highlighted cycle edges are drawn bold red."""
    highlighted_edges = set()
    highlighted_nodes = set()
    for cycle in highlight:
        for k, node in enumerate(cycle.nodes):
            nxt = cycle.nodes[(k + 1) % len(cycle.nodes)]
            highlighted_edges.add((node, nxt))
            highlighted_nodes.add(node)
    lines = ["digraph periodicity {"]
    for node in sorted(graph.nodes):
        attrs = f'label="{node_id(g, node)}"'
        if node in highlighted_nodes:
            attrs += ", color=red, penwidth=2"
        if node in graph.degenerate_flags:
            attrs += ", style=dashed"
        lines.append(f'  "{node_id(g, node)}" [{attrs}];')
    for node in sorted(graph.nodes):
        for j in sorted(graph.edges[node]):
            target = graph.edges[node][j]
            attrs = f'label="{g.players[j]}"'
            if (node, target) in highlighted_edges:
                attrs += ", color=red, penwidth=2"
            lines.append(f'  "{node_id(g, node)}" -> "{node_id(g, target)}" [{attrs}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_jsonable(value):
    """Recursively render Fractions as strings for machine reports."""
    if isinstance(value, Fraction):
        return format_fraction(value)
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if isinstance(value, (frozenset, set)):
        return sorted(to_jsonable(v) for v in value)
    return value


def dump_report(report: dict) -> str:
    return json.dumps(to_jsonable(report), indent=2, sort_keys=True) + "\n"
