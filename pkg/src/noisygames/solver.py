"""Backward induction over the channel: win probabilities and optimal moves.

For the player to move at position ``v``, transmitting move ``w`` wins with
probability

    value(v, w) = sum over received moves u of (1 - value(u)) * row[w][u]

where ``row`` is the channel matrix at ``v``: the opponent then moves from
wherever the channel landed.  A terminal position is worth 0 to the player
confronted with it; elsewhere the position value is the max over transmitted
moves.  Evaluation is a single iterative pass over a topological order, so
probabilities at followers are always available before they are needed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errormodel import MoveErrorModel, validate_model
from .graph import GameGraph, topological_order, validate_graph

#: Two per-move values within this distance of the max are treated as tied;
#: the same tolerance separates P (value 0) and N (value 1) from O positions.
TIE_TOLERANCE = 1e-9

CLASS_P = "P"
CLASS_N = "N"
CLASS_O = "O"


@dataclass(frozen=True)
class SolvedGame:
    """Solver output, aligned with the graph's position and follower order.

    ``optimal_moves[v]`` holds every move index whose value is within
    TIE_TOLERANCE of ``values[v]``; the canonical single representative is
    the smallest index.
    """

    graph: GameGraph
    values: tuple[float, ...]
    move_values: tuple[tuple[float, ...], ...]
    optimal_moves: tuple[tuple[int, ...], ...]
    classes: tuple[str, ...]

    def value(self, v: int) -> float:
        return self.values[v]

    def canonical_move(self, v: int) -> int:
        """Smallest optimal move index at a non-terminal position."""
        return self.optimal_moves[v][0]


def move_values(
    follower_values: list[float] | tuple[float, ...],
    row_matrix,
) -> list[float]:
    """Per-transmitted-move win probabilities given follower values.

    ``row_matrix[w][u]`` is the probability that sent move ``w`` lands as
    follower ``u``.  Output ``w`` is the expectation of (1 - follower value)
    under row ``w``; as a convex combination it stays within [0, 1].

    Raises:
        ValueError: a row length differs from the follower count.
    """
    n = len(follower_values)
    complement = [1.0 - x for x in follower_values]
    out: list[float] = []
    for w, row in enumerate(row_matrix):
        if len(row) != n:
            raise ValueError(
                f"row {w} has {len(row)} entries for {n} follower values"
            )
        out.append(sum(q * c for q, c in zip(row, complement)))
    return out


def solve(graph: GameGraph, model: MoveErrorModel) -> SolvedGame:
    """Solve the whole game: values, per-move values, argmax sets, classes.

    Raises:
        ValueError: graph or model invalid, or dimensionally inconsistent.
        GraphCycleError: the graph is not acyclic.
    """
    graph_report = validate_graph(graph)
    if not graph_report.ok:
        raise ValueError(f"invalid graph: {graph_report}")
    model_report = validate_model(model, graph)
    if not model_report.ok:
        raise ValueError(f"invalid model: {model_report}")

    n = graph.position_count
    values: list[float] = [0.0] * n
    per_move: list[tuple[float, ...]] = [()] * n
    optimal: list[tuple[int, ...]] = [()] * n

    for v in topological_order(graph):
        follower_list = graph.followers[v]
        if not follower_list:
            continue
        fv = [values[u] for u in follower_list]
        mv = move_values(fv, model.rows[v])
        best = max(mv)
        values[v] = best
        per_move[v] = tuple(mv)
        optimal[v] = tuple(
            w for w, x in enumerate(mv) if x >= best - TIE_TOLERANCE
        )

    classes = tuple(_classify_value(x) for x in values)
    return SolvedGame(
        graph=graph,
        values=tuple(values),
        move_values=tuple(per_move),
        optimal_moves=tuple(optimal),
        classes=classes,
    )


def _classify_value(value: float) -> str:
    if value <= TIE_TOLERANCE:
        return CLASS_P
    if value >= 1.0 - TIE_TOLERANCE:
        return CLASS_N
    return CLASS_O


def classify(solved: SolvedGame) -> tuple[str, ...]:
    """Per-position labels: P (mover loses), N (mover wins), O (in between)."""
    return tuple(_classify_value(x) for x in solved.values)


def fair_chance_hypotheses(
    graph: GameGraph, model: MoveErrorModel, solved: SolvedGame
) -> bool:
    """Whether the sufficient condition for a fair chance game holds.

    True iff the channel is equiprobable at every non-terminal position and
    every O-position has as many followers of value 0 as of value 1.  When
    it holds, every O-position is worth exactly 1/2.
    """
    for v in range(graph.position_count):
        degree = len(graph.followers[v])
        if degree == 0:
            continue
        uniform = 1.0 / degree
        for row in model.rows[v]:
            if any(abs(q - uniform) > TIE_TOLERANCE for q in row):
                return False
    for v in range(graph.position_count):
        if _classify_value(solved.values[v]) != CLASS_O:
            continue
        zeros = ones = 0
        for u in graph.followers[v]:
            cls = _classify_value(solved.values[u])
            if cls == CLASS_P:
                zeros += 1
            elif cls == CLASS_N:
                ones += 1
        if zeros != ones:
            return False
    return True
