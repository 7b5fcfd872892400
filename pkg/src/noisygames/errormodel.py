"""Per-position move error channels as row-stochastic matrices.

A model assigns every position ``v`` a square matrix over its follower
list: row ``w`` gives the probability that a transmitted move ``w`` lands
as each received move ``u``.  Rows and columns are indexed by the owning
graph's follower order; terminal positions carry an empty matrix.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import GameGraph, ValidationReport

ROW_SUM_TOLERANCE = 1e-9


@dataclass(frozen=True)
class MoveErrorModel:
    """One stochastic matrix per position, stored dense as nested tuples."""

    rows: tuple[tuple[tuple[float, ...], ...], ...]

    def __post_init__(self):
        object.__setattr__(
            self, "rows", tuple(tuple(tuple(row) for row in mat) for mat in self.rows)
        )

    @property
    def position_count(self) -> int:
        return len(self.rows)

    def matrix(self, v: int) -> tuple[tuple[float, ...], ...]:
        return self.rows[v]

    def row(self, v: int, sent: int) -> tuple[float, ...]:
        return self.rows[v][sent]


def validate_model(model: MoveErrorModel, graph: GameGraph) -> ValidationReport:
    """Check dimensions against the graph and stochasticity of every row."""
    report = ValidationReport()
    if model.position_count != graph.position_count:
        report.add(
            f"model covers {model.position_count} positions, "
            f"graph has {graph.position_count}"
        )
        return report
    for v in range(graph.position_count):
        degree = len(graph.followers[v])
        mat = model.rows[v]
        if len(mat) != degree:
            report.add(f"position {v}: {len(mat)} rows for {degree} followers")
            continue
        for w, row in enumerate(mat):
            if len(row) != degree:
                report.add(
                    f"position {v} row {w}: {len(row)} entries for {degree} followers"
                )
                continue
            for u, q in enumerate(row):
                if not 0.0 <= q <= 1.0:
                    report.add(f"position {v} row {w} entry {u}: {q} outside [0, 1]")
            total = sum(row)
            if abs(total - 1.0) > ROW_SUM_TOLERANCE:
                report.add(f"position {v} row {w}: sums to {total!r}, not 1")
    return report


def identity_model(graph: GameGraph) -> MoveErrorModel:
    """Noiseless channel: every transmitted move lands as itself."""
    rows = []
    for follower_list in graph.followers:
        n = len(follower_list)
        rows.append(
            tuple(
                tuple(1.0 if w == u else 0.0 for u in range(n)) for w in range(n)
            )
        )
    return MoveErrorModel(tuple(rows))


def equiprobable_model(graph: GameGraph) -> MoveErrorModel:
    """Maximally noisy channel: every row is uniform over the followers."""
    rows = []
    for follower_list in graph.followers:
        n = len(follower_list)
        if n == 0:
            rows.append(())
            continue
        row = tuple(1.0 / n for _ in range(n))
        rows.append(tuple(row for _ in range(n)))
    return MoveErrorModel(tuple(rows))


def perturb(model: MoveErrorModel, graph: GameGraph, epsilon: float) -> MoveErrorModel:
    """Strictly positive variant: add epsilon/degree to every entry, renormalize.

    The additive shift alone would make rows sum to 1 + epsilon, so each row
    is divided by (1 + epsilon) to stay a distribution.  Every entry of the
    result is strictly positive, uniform rows are unchanged, and for small
    epsilon per-move value ordering is preserved (tested, not certified).

    Raises:
        ValueError: epsilon is not strictly positive.
    """
    if epsilon <= 0:
        raise ValueError(f"epsilon must be > 0, got {epsilon}")
    rows = []
    for v in range(model.position_count):
        mat = model.rows[v]
        n = len(graph.followers[v])
        if n == 0:
            rows.append(())
            continue
        shift = epsilon / n
        scale = 1.0 + epsilon
        rows.append(
            tuple(tuple((q + shift) / scale for q in row) for row in mat)
        )
    return MoveErrorModel(tuple(rows))
