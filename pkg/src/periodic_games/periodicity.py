"""Best-deviation maps, the induced periodicity graph, and its cycles.

Each node is a (player, action) pair. For every node and every opponent
there is exactly one outgoing edge: it points at the opponent's component of
the opponent profile that maximizes the node owner's payoff when he plays
that action. Actions lying on directed cycles of this graph are the
periodic actions.
"""

from __future__ import annotations

import enum
import itertools
from collections import deque
from dataclasses import dataclass, field
from typing import NamedTuple, Sequence, Union

from .errors import AnchorNotOnCycle, DegenerateArgmax
from .game import Game
from .game import payoff as game_payoff


class TiePolicy(enum.Enum):
    STRICT = "strict"
    LEX = "lex"


class Node(NamedTuple):
    player: int
    action: int


@dataclass(frozen=True)
class Cycle:
    """Simple directed cycle; the closing edge nodes[-1] -> nodes[0] is implicit."""

    nodes: tuple[Node, ...]

    @property
    def length(self) -> int:
        return len(self.nodes)

    @property
    def player_sequence(self) -> tuple[int, ...]:
        return tuple(n.player for n in self.nodes)


@dataclass(frozen=True)
class PeriodicityGraph:
    num_players: int
    nodes: tuple[Node, ...]
    edges: dict[Node, dict[int, Node]] = field(compare=False)
    degenerate_flags: frozenset[Node] = frozenset()

    def successors(self, node: Node) -> tuple[Node, ...]:
        targets = self.edges[node]
        return tuple(targets[j] for j in sorted(targets))


def _opponents(g: Game, i: int) -> tuple[int, ...]:
    return tuple(j for j in range(g.num_players) if j != i)


def best_deviation_profile(
    g: Game, player: Union[int, str], action: Union[int, str], policy: TiePolicy = TiePolicy.LEX
) -> tuple[tuple[int, ...], bool]:
    """Opponent profile maximizing the player's payoff at a fixed own action.

    Returns (opponent action indices in player order, strict flag). The flag
    is true iff the maximizer is unique. Ties raise DegenerateArgmax under
    the strict policy and resolve to the lexicographically smallest profile
    otherwise.
    """
    i = g.player_index(player)
    a = g.action_index(i, action)
    others = _opponents(g, i)
    best_value = None
    best_profiles: list[tuple[int, ...]] = []
    for opp in itertools.product(*(range(g.shape[j]) for j in others)):
        full = [0] * g.num_players
        full[i] = a
        for j, b in zip(others, opp):
            full[j] = b
        value = game_payoff(g, full)[i]
        if best_value is None or value > best_value:
            best_value = value
            best_profiles = [opp]
        elif value == best_value:
            best_profiles.append(opp)
    strict = len(best_profiles) == 1
    if not strict and policy is TiePolicy.STRICT:
        raise DegenerateArgmax(Node(i, a), best_profiles)
    return best_profiles[0], strict


def build_periodicity_graph(g: Game, policy: TiePolicy = TiePolicy.LEX) -> PeriodicityGraph:
    """Graph with one edge per (node, opponent); deterministic for a fixed policy."""
    nodes = tuple(Node(i, a) for i in range(g.num_players) for a in range(g.shape[i]))
    edges: dict[Node, dict[int, Node]] = {}
    degenerate: set[Node] = set()
    for node in nodes:
        opp_profile, strict = best_deviation_profile(g, node.player, node.action, policy)
        others = _opponents(g, node.player)
        edges[node] = {j: Node(j, b) for j, b in zip(others, opp_profile)}
        if not strict:
            degenerate.add(node)
    return PeriodicityGraph(
        num_players=g.num_players,
        nodes=nodes,
        edges=edges,
        degenerate_flags=frozenset(degenerate),
    )


def nodes_on_cycles(graph: PeriodicityGraph) -> frozenset[Node]:
    """Nodes lying on at least one directed cycle (reachable from themselves)."""
    result = set()
    for node in graph.nodes:
        seen = set()
        frontier = deque(graph.successors(node))
        found = False
        while frontier:
            current = frontier.popleft()
            if current == node:
                found = True
                break
            if current in seen:
                continue
            seen.add(current)
            frontier.extend(graph.successors(current))
        if found:
            result.add(node)
    return frozenset(result)


def periodic_actions(g: Game, policy: TiePolicy = TiePolicy.LEX) -> tuple[frozenset[int], ...]:
    """Per-player sets of actions whose node lies on a cycle of the graph."""
    graph = build_periodicity_graph(g, policy)
    cyclic = nodes_on_cycles(graph)
    return tuple(
        frozenset(n.action for n in cyclic if n.player == i) for i in range(g.num_players)
    )


def enumerate_cycles(graph: PeriodicityGraph, through: Node, max_len: int) -> list[Cycle]:
    """All simple cycles through a node with length <= max_len edges.

    Each cycle is reported once, rotated to start at ``through``. Sorted by
    length then node sequence.
    """
    if max_len < 2:
        raise ValueError("max_len must be at least 2")
    if through not in graph.edges:
        raise AnchorNotOnCycle(f"node {through} not in graph")
    cycles: list[Cycle] = []
    path: list[Node] = [through]
    on_path = {through}

    def extend(node: Node) -> None:
        for nxt in graph.successors(node):
            if nxt == through:
                if 2 <= len(path) <= max_len:
                    cycles.append(Cycle(tuple(path)))
                continue
            if nxt in on_path or len(path) >= max_len:
                continue
            path.append(nxt)
            on_path.add(nxt)
            extend(nxt)
            path.pop()
            on_path.remove(nxt)

    extend(through)
    cycles.sort(key=lambda c: (c.length, c.nodes))
    return cycles


def reach_cycle(graph: PeriodicityGraph, start: Node) -> tuple[Node, ...]:
    """Shortest walk from start ending at a node on some cycle.

    The walk has length 0 (just the start node) when the start is already
    periodic; it always exists because every node has out-degree >= 1.
    """
    cyclic = nodes_on_cycles(graph)
    if start in cyclic:
        return (start,)
    parents: dict[Node, Node] = {}
    seen = {start}
    frontier = deque([start])
    while frontier:
        current = frontier.popleft()
        for nxt in graph.successors(current):
            if nxt in seen:
                continue
            parents[nxt] = current
            if nxt in cyclic:
                walk = [nxt]
                while walk[-1] != start:
                    walk.append(parents[walk[-1]])
                return tuple(reversed(walk))
            seen.add(nxt)
            frontier.append(nxt)
    raise AssertionError("finite graph with out-degree >= 1 must reach a cycle")


def periodicity_number(c: Cycle, anchor_player: int) -> int:
    """Number of anchor-player nodes on the cycle; 2-player cycles have 2n edges."""
    n = sum(1 for node in c.nodes if node.player == anchor_player)
    if n == 0:
        raise AnchorNotOnCycle(f"player {anchor_player} has no node on cycle {c.nodes}")
    return n
