"""Nim variants.

1-pile Nim transmits moves as "chips left" codewords over a binary channel
that flips each digit independently with probability p; invalid receptions
are retransmitted, which conditions each row on the legal moves.  Multi-pile
Nim is paired with the equiprobable channel, under which it is a fair chance
game from any position that is neither a win nor a loss outright.
"""

from __future__ import annotations

from ..errormodel import MoveErrorModel
from ..graph import GameGraph
from ..solver import CLASS_N, CLASS_O, CLASS_P, SolvedGame, solve


def hamming(a: int, b: int) -> int:
    """Number of differing binary digits (population count of XOR)."""
    return (a ^ b).bit_count()


def nim1_graph(k: int) -> GameGraph:
    """1-pile Nim with k chips: positions 0..k, move = leave any smaller count.

    Follower order at position m is chips-left ascending 0, 1, ..., m-1;
    position 0 is terminal and k is the start.  k = 0 degenerates to a lone
    terminal start (the first player loses immediately).
    """
    if k < 0:
        raise ValueError(f"chip count must be >= 0, got {k}")
    followers = tuple(tuple(range(m)) for m in range(k + 1))
    labels = tuple(f"{m} chips" if m != 1 else "1 chip" for m in range(k + 1))
    return GameGraph(followers=followers, start=k, labels=labels)


def _bit_flip_row(m: int, sent: int, p: float) -> tuple[float, ...]:
    """Channel row at a position of m chips for transmitted move `sent`.

    Raw weight of landing on move j is p^d * (1-p)^(n-d) with d the Hamming
    distance between the n-digit codewords of `sent` and j, n the bit length
    of m; the row is the weights normalized over the m legal moves.  The
    normalization cancels the codeword length, so only the distances matter.
    At p = 1 every weight with d < n vanishes and the whole row can be zero;
    the row is then defined as the p -> 1 limit: uniform over the moves at
    maximal distance from `sent`.
    """
    n = m.bit_length()
    if p >= 1.0:
        dmax = max(hamming(sent, j) for j in range(m))
        hits = [1.0 if hamming(sent, j) == dmax else 0.0 for j in range(m)]
        return tuple(h / sum(hits) for h in hits)
    weights = [
        p ** hamming(sent, j) * (1.0 - p) ** (n - hamming(sent, j))
        for j in range(m)
    ]
    total = sum(weights)
    return tuple(w / total for w in weights)


def nim1_model(k: int, p: float) -> MoveErrorModel:
    """Bit-flip channel for 1-pile Nim of k chips with digit error rate p."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"digit error probability must lie in [0, 1], got {p}")
    rows: list[tuple[tuple[float, ...], ...]] = [()]
    for m in range(1, k + 1):
        rows.append(tuple(_bit_flip_row(m, s, p) for s in range(m)))
    return MoveErrorModel(tuple(rows))


def nim1_solution_curve(
    k: int, p_grid: list[float] | tuple[float, ...]
) -> list[tuple[float, tuple[int, ...]]]:
    """Start value and optimal transmitted moves of 1-pile Nim at each p."""
    graph = nim1_graph(k)
    out = []
    for p in p_grid:
        solved = solve(graph, nim1_model(k, p))
        out.append((solved.values[graph.start], solved.optimal_moves[graph.start]))
    return out


def nim_multi_graph(piles: tuple[int, ...] | list[int]) -> GameGraph:
    """Multi-pile Nim: a move reduces exactly one pile to a smaller count.

    Positions are all componentwise-dominated tuples, ordered
    lexicographically (so the all-zero terminal has index 0).  Follower
    order is pile index ascending, then new count ascending.
    """
    piles = tuple(piles)
    if not piles:
        raise ValueError("at least one pile required")
    if any(c < 0 for c in piles):
        raise ValueError(f"pile counts must be >= 0, got {piles}")

    positions: list[tuple[int, ...]] = []

    def extend(prefix: tuple[int, ...]) -> None:
        if len(prefix) == len(piles):
            positions.append(prefix)
            return
        for c in range(piles[len(prefix)] + 1):
            extend(prefix + (c,))

    extend(())
    index = {t: i for i, t in enumerate(positions)}
    followers = []
    for t in positions:
        moves = []
        for i, c in enumerate(t):
            for x in range(c):
                moves.append(index[t[:i] + (x,) + t[i + 1 :]])
        followers.append(tuple(moves))
    labels = tuple(str(t) for t in positions)
    return GameGraph(followers=tuple(followers), start=index[piles], labels=labels)


def nim_multi_positions(piles: tuple[int, ...] | list[int]) -> list[tuple[int, ...]]:
    """Pile tuples in the same order as nim_multi_graph's position ids."""
    piles = tuple(piles)
    positions: list[tuple[int, ...]] = []

    def extend(prefix: tuple[int, ...]) -> None:
        if len(prefix) == len(piles):
            positions.append(prefix)
            return
        for c in range(piles[len(prefix)] + 1):
            extend(prefix + (c,))

    extend(())
    return positions


def nim_multi_expected_class(position: tuple[int, ...]) -> str:
    """Predicted class under the equiprobable channel.

    With every pile at 0 or 1 chips the play is forced: an odd number of
    1-piles wins for the mover (N), an even number loses (P).  Any pile of
    2 or more makes the position an O-position.
    """
    if all(c <= 1 for c in position):
        ones = sum(position)
        return CLASS_N if ones % 2 == 1 else CLASS_P
    return CLASS_O


def nim_multi_solved_classes(
    piles: tuple[int, ...] | list[int], solved: SolvedGame
) -> list[tuple[tuple[int, ...], str, float]]:
    """(pile tuple, class, value) per position, for comparing with the
    prediction of nim_multi_expected_class."""
    tuples = nim_multi_positions(piles)
    return [
        (t, solved.classes[i], solved.values[i]) for i, t in enumerate(tuples)
    ]
