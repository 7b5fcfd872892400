"""Stochastic cross-check of the solver: play games through the sampled
channel and estimate win probabilities.

Channel rows are already conditioned on legal moves (retransmission of
invalid receptions is implicit), so a sampled landed move is always a legal
follower.  Each rollout owns a private generator derived from the run seed
and the rollout index, which keeps runs reproducible and lets chunks of
rollouts be merged by summing counts.
"""

from __future__ import annotations

import random
from bisect import bisect_right
from dataclasses import dataclass
from math import sqrt

from .errormodel import MoveErrorModel
from .graph import GameGraph
from .solver import SolvedGame, solve

PLAYER_I = "I"
PLAYER_II = "II"

_SEED_STRIDE = 2**64


@dataclass(frozen=True)
class Strategy:
    """A move chooser: the solver's argmax, uniform random, or a fixed table."""

    kind: str
    solved: SolvedGame | None = None
    table: tuple[int, ...] | None = None

    @classmethod
    def optimal(cls, solved: SolvedGame) -> "Strategy":
        """Smallest optimal move index at every position (canonical tie-break)."""
        return cls(kind="optimal", solved=solved)

    @classmethod
    def uniform_random(cls) -> "Strategy":
        return cls(kind="uniform-random")

    @classmethod
    def fixed_table(cls, graph: GameGraph, table: list[int]) -> "Strategy":
        for v, move in enumerate(table):
            degree = len(graph.followers[v])
            if degree and not 0 <= move < degree:
                raise ValueError(f"table entry {move} illegal at position {v}")
        return cls(kind="fixed-table", table=tuple(table))

    def choose(self, graph: GameGraph, v: int, rng: random.Random) -> int:
        if self.kind == "optimal":
            return self.solved.optimal_moves[v][0]
        if self.kind == "uniform-random":
            return rng.randrange(len(graph.followers[v]))
        return self.table[v]


@dataclass(frozen=True)
class SimulationReport:
    games_played: int
    first_player_wins: int

    @property
    def estimate(self) -> float:
        return self.first_player_wins / self.games_played

    @property
    def standard_error(self) -> float:
        q = self.estimate
        return sqrt(q * (1.0 - q) / self.games_played)


def sample_received_move(
    model: MoveErrorModel, v: int, sent: int, draw: float
) -> int:
    """Inverse-CDF sample of the landed move for a unit draw in [0, 1).

    Walks the cumulative sums of row psi_v(sent, .) in stored order; zero
    probability entries can never be returned.
    """
    row = model.rows[v][sent]
    acc = 0.0
    cumulative = []
    for q in row:
        acc += q
        cumulative.append(acc)
    idx = bisect_right(cumulative, draw)
    if idx >= len(row):  # guard against cumulative sum rounding below 1
        idx = max(i for i, q in enumerate(row) if q > 0.0)
    return idx


def _rollout_rng(seed: int, index: int) -> random.Random:
    return random.Random(seed * _SEED_STRIDE + index)


def play_game(
    graph: GameGraph,
    model: MoveErrorModel,
    strategy_one: Strategy,
    strategy_two: Strategy,
    seed: int,
) -> str:
    """Play one game from the start position; returns "I" or "II".

    Player I moves first; the player confronted with a terminal position at
    their turn loses.  Deterministic for a given seed.
    """
    winner, _ = play_game_transcript(graph, model, strategy_one, strategy_two, seed)
    return winner


def play_game_transcript(
    graph: GameGraph,
    model: MoveErrorModel,
    strategy_one: Strategy,
    strategy_two: Strategy,
    seed: int,
) -> tuple[str, list[tuple[str, int, int, int]]]:
    """As play_game, also returning (player, sent, landed, position) entries."""
    rng = _rollout_rng(seed, 0)
    transcript: list[tuple[str, int, int, int]] = []
    pos = graph.start
    players = (PLAYER_I, PLAYER_II)
    strategies = (strategy_one, strategy_two)
    turn = 0
    while graph.followers[pos]:
        sent = strategies[turn].choose(graph, pos, rng)
        landed = sample_received_move(model, pos, sent, rng.random())
        new_pos = graph.followers[pos][landed]
        transcript.append((players[turn], sent, landed, new_pos))
        pos = new_pos
        turn ^= 1
    return players[turn ^ 1], transcript


def estimate_win_probability(
    graph: GameGraph,
    model: MoveErrorModel,
    games: int,
    seed: int,
    solved: SolvedGame | None = None,
) -> SimulationReport:
    """Win-rate estimate with both players on the optimal strategy.

    Raises:
        ValueError: games < 1.
    """
    if games < 1:
        raise ValueError(f"need at least one game, got {games}")
    if solved is None:
        solved = solve(graph, model)

    followers = graph.followers
    canonical = [moves[0] if moves else -1 for moves in solved.optimal_moves]
    # cumulative channel row for each position's canonical move
    cumulative: list[tuple[float, ...]] = []
    for v in range(graph.position_count):
        if not followers[v]:
            cumulative.append(())
            continue
        acc = 0.0
        cum = []
        for q in model.rows[v][canonical[v]]:
            acc += q
            cum.append(acc)
        cumulative.append(tuple(cum))
    positive_fallback = [
        max((i for i, q in enumerate(model.rows[v][canonical[v]]) if q > 0.0), default=-1)
        if followers[v]
        else -1
        for v in range(graph.position_count)
    ]

    start = graph.start
    wins = 0
    for i in range(games):
        rng_random = _rollout_rng(seed, i).random
        pos = start
        turn = 0
        while followers[pos]:
            cum = cumulative[pos]
            idx = bisect_right(cum, rng_random())
            if idx >= len(cum):
                idx = positive_fallback[pos]
            pos = followers[pos][idx]
            turn ^= 1
        if turn == 1:  # player to move at the terminal is II: I wins
            wins += 1
    return SimulationReport(games_played=games, first_player_wins=wins)
