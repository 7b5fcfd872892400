"""Chomp on an n-rows by m-columns bar with a poisoned bottom-left square.

A position is the non-increasing tuple of remaining column heights (the
poisoned column keeps height >= 1).  Chomping the remaining cell (c, r)
removes every cell at column >= c and row >= r.  The channel variants model
the bar physically breaking near the targeted square:

  n8          target hit with probability p, the rest split equally among
              the 8-neighbourhood cells that are legal moves
  n4          same with the 4-neighbourhood
  lower_left  misses land left / below / diagonally below-left of the
              target with base weights (1-p)/4, (1-p)/4, (1-p)/2
  uniform     every legal move equally likely, whatever was sent

For n8/n4, weights of missing neighbours are re-spread by equal split over
the surviving ones; lower_left re-spreads proportionally to the base
weights.  A target with no surviving neighbour is received with certainty.
"""

from __future__ import annotations

from ..errormodel import MoveErrorModel
from ..graph import GameGraph

CHOMP_VARIANTS = ("n8", "n4", "lower_left", "uniform")

_N8_OFFSETS = ((-1, -1), (0, -1), (1, -1), (-1, 0), (1, 0), (-1, 1), (0, 1), (1, 1))
_N4_OFFSETS = ((0, -1), (-1, 0), (1, 0), (0, 1))
_LOWER_LEFT_OFFSETS = (((-1, 0), 0.25), ((0, -1), 0.25), ((-1, -1), 0.5))


def chomp_positions(n: int, m: int) -> list[tuple[int, ...]]:
    """All height tuples, lexicographically ascending; index 0 is terminal."""
    if n < 1 or m < 1:
        raise ValueError(f"bar must be at least 1x1, got {n}x{m}")
    positions: list[tuple[int, ...]] = []

    def extend(prefix: tuple[int, ...], cap: int) -> None:
        if len(prefix) == m:
            positions.append(prefix)
            return
        low = 1 if not prefix else 0
        for h in range(low, cap + 1):
            extend(prefix + (h,), h)

    extend((), n)
    return positions


def chomp_moves(heights: tuple[int, ...]) -> list[tuple[int, int]]:
    """Legal target cells (column, row) in row-major order, poison excluded."""
    n = max(heights)
    cells = []
    for r in range(n):
        for c, h in enumerate(heights):
            if r < h and (c, r) != (0, 0):
                cells.append((c, r))
    return cells


def chomp_apply(heights: tuple[int, ...], cell: tuple[int, int]) -> tuple[int, ...]:
    """Heights after chomping at `cell`."""
    c, r = cell
    return heights[:c] + tuple(min(h, r) for h in heights[c:])


def chomp_graph(n: int, m: int) -> GameGraph:
    """Game graph of the n x m bar; start is the full bar."""
    positions = chomp_positions(n, m)
    index = {h: i for i, h in enumerate(positions)}
    followers = tuple(
        tuple(index[chomp_apply(h, cell)] for cell in chomp_moves(h))
        for h in positions
    )
    labels = tuple("heights " + str(h) for h in positions)
    return GameGraph(followers=followers, start=index[(n,) * m], labels=labels)


def _neighbourhood_row(
    heights: tuple[int, ...],
    cells: list[tuple[int, int]],
    target: tuple[int, int],
    p: float,
    offsets,
) -> tuple[float, ...]:
    legal = set(cells)
    tc, tr = target
    neighbours = [
        (tc + dc, tr + dr) for dc, dr in offsets if (tc + dc, tr + dr) in legal
    ]
    row = {cell: 0.0 for cell in cells}
    if not neighbours:
        row[target] = 1.0
    else:
        row[target] = p
        share = (1.0 - p) / len(neighbours)
        for cell in neighbours:
            row[cell] += share
    return tuple(row[cell] for cell in cells)


def _lower_left_row(
    heights: tuple[int, ...],
    cells: list[tuple[int, int]],
    target: tuple[int, int],
    p: float,
) -> tuple[float, ...]:
    legal = set(cells)
    tc, tr = target
    valid = [
        ((tc + dc, tr + dr), weight)
        for (dc, dr), weight in _LOWER_LEFT_OFFSETS
        if (tc + dc, tr + dr) in legal
    ]
    row = {cell: 0.0 for cell in cells}
    if not valid:
        row[target] = 1.0
    else:
        row[target] = p
        total = sum(weight for _, weight in valid)
        for cell, weight in valid:
            row[cell] += (1.0 - p) * weight / total
    return tuple(row[cell] for cell in cells)


def chomp_model(n: int, m: int, variant: str, p: float = 0.0) -> MoveErrorModel:
    """Channel for the n x m bar under one of the four named variants.

    Raises:
        ValueError: unknown variant, or p outside [0, 1].
    """
    if variant not in CHOMP_VARIANTS:
        raise ValueError(
            f"unknown chomp variant {variant!r}, expected one of {CHOMP_VARIANTS}"
        )
    if variant != "uniform" and not 0.0 <= p <= 1.0:
        raise ValueError(f"accuracy probability must lie in [0, 1], got {p}")
    rows = []
    for heights in chomp_positions(n, m):
        cells = chomp_moves(heights)
        if not cells:
            rows.append(())
            continue
        if variant == "uniform":
            uniform = tuple(1.0 / len(cells) for _ in cells)
            rows.append(tuple(uniform for _ in cells))
        elif variant == "lower_left":
            rows.append(
                tuple(_lower_left_row(heights, cells, t, p) for t in cells)
            )
        else:
            offsets = _N8_OFFSETS if variant == "n8" else _N4_OFFSETS
            rows.append(
                tuple(
                    _neighbourhood_row(heights, cells, t, p, offsets)
                    for t in cells
                )
            )
    return MoveErrorModel(tuple(rows))
