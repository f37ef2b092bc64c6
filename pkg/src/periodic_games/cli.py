"""Batch command-line interface.

Exit codes: 0 success, 1 usage error, 2 parse/validation error, 3 degenerate
argmax under the strict tie policy.
"""

from __future__ import annotations

import argparse
import random
import sys
from fractions import Fraction

from . import __version__
from .coco import coco_solution, decompose
from .errors import DegenerateArgmax, GameError, ParseError, ValidationError
from .game import Game, expected_utility, make_game
from .io import dump_report, export_dot, node_id, parse_bayes, parse_game, serialize_game
from .mixed import invariance_check, nash_support_enumeration, periodic_mixed
from .bayes import ex_ante_game, interim_correlated_game, interim_game
from .errors import Infeasible
from .periodicity import (
    Node,
    TiePolicy,
    build_periodicity_graph,
    enumerate_cycles,
    nodes_on_cycles,
    periodic_actions,
    reach_cycle,
)
from .rationalizability import DominanceMode, iesds, rationalizable_periodic, type_count

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INVALID = 2
EXIT_DEGENERATE = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse defaults to exit code 2; we use 1 for usage
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _policy(name: str) -> TiePolicy:
    return TiePolicy.STRICT if name == "strict" else TiePolicy.LEX


def all_cycles(graph, max_len: int):
    """Every simple cycle of the graph, deduplicated up to rotation."""
    seen = set()
    out = []
    for node in sorted(graph.nodes):
        for cycle in enumerate_cycles(graph, node, max_len):
            rotated = min(
                tuple(cycle.nodes[k:] + cycle.nodes[:k]) for k in range(len(cycle.nodes))
            )
            if rotated not in seen:
                seen.add(rotated)
                out.append(cycle)
    return out


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _base_report(args, command: str) -> dict:
    return {
        "tool_version": __version__,
        "command": command,
        "tie_policy": getattr(args, "tie_policy", "lex"),
    }


def _emit(args, report: dict, text_lines: list[str], dot: str = None) -> None:
    if args.format == "machine":
        sys.stdout.write(dump_report(report))
    elif args.format == "dot":
        if dot is None:
            raise ValidationError("DOT output is not available for this command")
        sys.stdout.write(dot)
    else:
        sys.stdout.write("\n".join(text_lines) + "\n")


def _action_sets(g: Game, sets) -> dict:
    return {
        g.players[i]: sorted(g.actions[i][a] for a in actions)
        for i, actions in enumerate(sets)
    }


def cmd_analyze(args) -> int:
    g = parse_game(_read(args.game))
    policy = _policy(args.tie_policy)
    graph = build_periodicity_graph(g, policy)
    periodic = periodic_actions(g, policy)
    survivors = iesds(g, DominanceMode.ALLOW_MIXED).survivors
    rationalizable = rationalizable_periodic(g, policy)
    max_len = args.max_len or len(graph.nodes)
    cycles = all_cycles(graph, max_len)
    report = _base_report(args, "analyze")
    report["periodic_actions"] = _action_sets(g, periodic)
    report["iesds_survivors"] = _action_sets(g, survivors)
    report["rationalizable_periodic"] = _action_sets(g, rationalizable)
    cycle_docs = []
    lines = [f"game: {', '.join(g.players)}"]
    lines.append("periodic actions: " + str(report["periodic_actions"]))
    lines.append("iesds survivors: " + str(report["iesds_survivors"]))
    lines.append("rationalizable periodic: " + str(report["rationalizable_periodic"]))
    for cycle in cycles:
        doc = {
            "nodes": [node_id(g, n) for n in cycle.nodes],
            "players": [g.players[p] for p in cycle.player_sequence],
            "length": cycle.length,
        }
        if g.num_players == 2:
            counts = type_count(cycle, cycle.nodes[0].player)
            doc["periodicity_number"] = counts.n
            doc["types"] = counts.types
            doc["errors"] = counts.errors
        cycle_docs.append(doc)
        lines.append("cycle: " + " -> ".join(doc["nodes"]) + f" (length {cycle.length})")
        if "types" in doc:
            lines.append(f"  types={doc['types']} errors={doc['errors']}")
    report["cycles"] = cycle_docs
    report["degenerate_nodes"] = sorted(node_id(g, n) for n in graph.degenerate_flags)
    _emit(args, report, lines, dot=export_dot(graph, g, cycles))
    return EXIT_OK


def cmd_cycles(args) -> int:
    g = parse_game(_read(args.game))
    policy = _policy(args.tie_policy)
    graph = build_periodicity_graph(g, policy)
    max_len = args.max_len or len(graph.nodes)
    if args.through:
        player_label, _, action_label = args.through.partition(":")
        i = g.player_index(player_label)
        node = Node(i, g.action_index(i, action_label))
        cycles = enumerate_cycles(graph, node, max_len)
    else:
        cycles = all_cycles(graph, max_len)
    report = _base_report(args, "cycles")
    report["cycles"] = [[node_id(g, n) for n in c.nodes] for c in cycles]
    lines = ["cycles:"] + [
        "  " + " -> ".join(node_id(g, n) for n in c.nodes) for c in cycles
    ] or ["no cycles"]
    _emit(args, report, lines, dot=export_dot(graph, g, cycles))
    return EXIT_OK


def cmd_mixed(args) -> int:
    g = parse_game(_read(args.game))
    report = _base_report(args, "mixed")
    lines = []
    components = {}
    vectors = []
    for i, player in enumerate(g.players):
        try:
            result = periodic_mixed(g, i)
        except Infeasible:
            components[player] = None
            vectors.append(None)
            lines.append(f"{player}: no payoff-equalizing mixture exists")
            continue
        spread = invariance_check(g, i, result.probabilities)
        components[player] = {
            "probabilities": list(result.probabilities),
            "value": result.value,
            "solution_dimension": result.dimension,
            "payoff_spread": spread,
        }
        vectors.append(result.probabilities)
        lines.append(
            f"{player}: p={[str(v) for v in result.probabilities]} "
            f"value={result.value} spread={spread}"
        )
    report["periodic_mixed"] = components
    if all(v is not None for v in vectors):
        utils = expected_utility(g, tuple(vectors))
        report["joint_expected_utilities"] = list(utils)
        lines.append("joint expected utilities: " + str([str(u) for u in utils]))
    _emit(args, report, lines)
    return EXIT_OK


def cmd_nash(args) -> int:
    g = parse_game(_read(args.game))
    equilibria = nash_support_enumeration(g)
    report = _base_report(args, "nash")
    report["equilibria"] = [
        {
            "row_strategy": list(e.row_strategy),
            "col_strategy": list(e.col_strategy),
            "utilities": list(e.utilities),
            "support": [list(s) for s in e.support],
        }
        for e in equilibria
    ]
    lines = [f"{len(equilibria)} equilibria"]
    for e in equilibria:
        lines.append(
            f"  p={[str(v) for v in e.row_strategy]} q={[str(v) for v in e.col_strategy]} "
            f"utilities=({e.utilities[0]}, {e.utilities[1]})"
        )
    _emit(args, report, lines)
    return EXIT_OK


def cmd_coco(args) -> int:
    g = parse_game(_read(args.game))
    split = decompose(g)
    solution = coco_solution(g)
    report = _base_report(args, "coco")
    report["cooperative_matrix"] = [list(row) for row in split.cooperative]
    report["competitive_matrix"] = [list(row) for row in split.competitive]
    report["vsharp"] = solution.vsharp
    report["vs"] = solution.vs
    report["profile"] = [
        g.actions[0][solution.profile[0]],
        g.actions[1][solution.profile[1]],
    ]
    report["tied_profiles"] = [
        [g.actions[0][r], g.actions[1][c]] for r, c in solution.tied_profiles
    ]
    report["side_payment"] = solution.side_payment
    report["final_payoffs"] = list(solution.final_payoffs)
    report["zero_sum_strategies"] = [list(s) for s in solution.zero_sum_strategies]
    lines = [
        f"joint maximum: {solution.vsharp} at {tuple(report['profile'])}",
        f"zero-sum value: {solution.vs}",
        f"side payment (column pays row): {solution.side_payment}",
        f"final payoffs: ({solution.final_payoffs[0]}, {solution.final_payoffs[1]})",
    ]
    _emit(args, report, lines)
    return EXIT_OK


def cmd_bayes(args) -> int:
    bg = parse_bayes(_read(args.game))
    builders = {
        "ex-ante": ex_ante_game,
        "interim": interim_game,
        "interim-correlated": interim_correlated_game,
    }
    game = builders[args.to](bg)
    sys.stdout.write(serialize_game(game))
    return EXIT_OK


def cmd_check(args) -> int:
    """Seeded random-game sweep of the existence and stability guarantees."""
    rng = random.Random(args.seed)
    checked = 0
    for _ in range(args.count):
        n = rng.randint(2, 4)
        shape = [rng.randint(2, 4) for _ in range(n)]
        players = [f"P{i + 1}" for i in range(n)]
        actions = [[f"s{k + 1}" for k in range(size)] for size in shape]

        def table(depth, _shape=shape, _n=n):
            if depth == _n:
                return [Fraction(rng.randint(-9, 9)) for _ in range(_n)]
            return [table(depth + 1) for _ in range(_shape[depth])]

        g = make_game(players, actions, table(0))
        graph = build_periodicity_graph(g, TiePolicy.LEX)
        cyclic = nodes_on_cycles(graph)
        if not cyclic:
            sys.stdout.write("FAIL: game without periodic actions found\n")
            return EXIT_INVALID
        for node in graph.nodes:
            walk = reach_cycle(graph, node)
            if len(walk) > len(graph.nodes):
                sys.stdout.write("FAIL: stability walk longer than node count\n")
                return EXIT_INVALID
        checked += 1
    sys.stdout.write(f"checked {checked} random games: all have periodic actions\n")
    return EXIT_OK


def build_parser() -> _Parser:
    parser = _Parser(prog="perigame", description="Exact analysis of finite strategic form games")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, needs_game=True):
        if needs_game:
            p.add_argument("game", help="input file")
        p.add_argument("--tie-policy", choices=("strict", "lex"), default="lex")
        p.add_argument("--format", choices=("text", "machine", "dot"), default="text")

    p = sub.add_parser("analyze", help="periodic actions, survivors, cycles, type counts")
    common(p)
    p.add_argument("--max-len", type=int, default=None)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("cycles", help="enumerate simple cycles of the periodicity graph")
    common(p)
    p.add_argument("--through", help="node as player:action-label", default=None)
    p.add_argument("--max-len", type=int, default=None)
    p.set_defaults(func=cmd_cycles)

    p = sub.add_parser("mixed", help="payoff-equalizing mixtures and invariance spread")
    common(p)
    p.set_defaults(func=cmd_mixed)

    p = sub.add_parser("nash", help="Nash equilibria by exact support enumeration")
    common(p)
    p.set_defaults(func=cmd_nash)

    p = sub.add_parser("coco", help="cooperative-competitive decomposition and solution")
    common(p)
    p.set_defaults(func=cmd_coco)

    p = sub.add_parser("bayes", help="build a complete-information companion game")
    common(p)
    p.add_argument("--to", choices=("ex-ante", "interim", "interim-correlated"), required=True)
    p.set_defaults(func=cmd_bayes)

    p = sub.add_parser("check", help="random-game sweep of the structural guarantees")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--format", choices=("text",), default="text")
    p.set_defaults(func=cmd_check)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except DegenerateArgmax as exc:
        sys.stderr.write(f"degenerate argmax: {exc}\n")
        return EXIT_DEGENERATE
    except (ParseError, ValidationError) as exc:
        sys.stderr.write(f"invalid input: {exc}\n")
        return EXIT_INVALID
    except FileNotFoundError as exc:
        sys.stderr.write(f"cannot read input: {exc}\n")
        return EXIT_INVALID
    except GameError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INVALID


if __name__ == "__main__":
    raise SystemExit(main())
