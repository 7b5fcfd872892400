"""Shared test machinery: random game instances and independent oracles.

The oracles deliberately avoid the library's topological-order dynamic
programming: values come from exhaustive enumeration of play sequences, and
classical win/lose labels from plain win-iff-some-losing-follower recursion.
"""

from __future__ import annotations

import random
import sys

from noisygames.errormodel import MoveErrorModel
from noisygames.graph import GameGraph

sys.setrecursionlimit(100_000)


def random_game(
    seed: int,
    max_positions: int = 8,
    strictly_positive: bool = False,
) -> tuple[GameGraph, MoveErrorModel]:
    """A random DAG game with a random valid channel.

    Edges only point from higher to lower indices, so the graph is acyclic
    by construction.  With strictly_positive=False roughly a third of the
    rows get hard zeros (renormalized).
    """
    rng = random.Random(seed)
    n = rng.randint(2, max_positions)
    followers: list[tuple[int, ...]] = [()]
    for v in range(1, n):
        if v != n - 1 and rng.random() < 0.15:
            followers.append(())
            continue
        degree = rng.randint(1, v)
        followers.append(tuple(sorted(rng.sample(range(v), degree))))
    graph = GameGraph(followers=tuple(followers), start=n - 1)

    rows = []
    for v in range(n):
        degree = len(followers[v])
        if degree == 0:
            rows.append(())
            continue
        matrix = []
        for _ in range(degree):
            weights = [rng.random() + 1e-3 for _ in range(degree)]
            if not strictly_positive and degree > 1 and rng.random() < 0.3:
                kill = rng.sample(range(degree), rng.randint(1, degree - 1))
                for i in kill:
                    weights[i] = 0.0
            total = sum(weights)
            matrix.append(tuple(w / total for w in weights))
        rows.append(tuple(matrix))
    return graph, MoveErrorModel(tuple(rows))


def oracle_win_probabilities(graph: GameGraph, model: MoveErrorModel) -> list[float]:
    """Win probability of the mover at every position, solver-free.

    The argmax strategy is recomputed here by recursion over the game tree;
    the value at each position is then the exhaustive expectation over all
    positive-probability play sequences under that fixed strategy profile.
    """
    value_memo: dict[int, float] = {}

    def value(v: int) -> float:
        if v in value_memo:
            return value_memo[v]
        fol = graph.followers[v]
        if not fol:
            result = 0.0
        else:
            result = max(
                sum(q * (1.0 - value(u)) for q, u in zip(model.rows[v][w], fol))
                for w in range(len(fol))
            )
        value_memo[v] = result
        return result

    strategy: dict[int, int] = {}
    for v in range(graph.position_count):
        fol = graph.followers[v]
        if not fol:
            continue
        vals = [
            sum(q * (1.0 - value(u)) for q, u in zip(model.rows[v][w], fol))
            for w in range(len(fol))
        ]
        strategy[v] = vals.index(max(vals))

    def mover_win_probability(v0: int) -> float:
        total = 0.0
        stack = [(v0, 1.0, 0)]
        while stack:
            v, prob, plies = stack.pop()
            fol = graph.followers[v]
            if not fol:
                if plies % 2 == 1:  # the original mover made the last move
                    total += prob
                continue
            sent = strategy[v]
            for q, u in zip(model.rows[v][sent], fol):
                if q > 0.0:
                    stack.append((u, prob * q, plies + 1))
        return total

    return [mover_win_probability(v) for v in range(graph.position_count)]


def classical_win_labels(graph: GameGraph) -> list[bool]:
    """Normal-play win/lose labels: a position wins iff some follower loses."""
    memo: dict[int, bool] = {}

    def win(v: int) -> bool:
        if v not in memo:
            memo[v] = False  # cycle guard; graphs here are DAGs
            memo[v] = any(not win(u) for u in graph.followers[v])
        return memo[v]

    return [win(v) for v in range(graph.position_count)]


def staircase_position_count(n: int, m: int) -> int:
    """Chomp position count by brute force over all cell subsets.

    A position is a down-closed set of cells containing the poisoned one:
    (c, r) present implies every (c', r') with c' <= c and r' <= r present.
    """
    cells = [(c, r) for r in range(n) for c in range(m)]
    count = 0
    for mask in range(1 << len(cells)):
        chosen = {cells[i] for i in range(len(cells)) if mask >> i & 1}
        if (0, 0) not in chosen:
            continue
        if all(
            (c2, r2) in chosen
            for (c, r) in chosen
            for c2 in range(c + 1)
            for r2 in range(r + 1)
        ):
            count += 1
    return count
