"""Finite game digraphs: validation, terminals and evaluation order.

Positions are dense integer ids; each carries an ordered follower list.
Follower order is significant everywhere downstream: it fixes the row and
column indexing of channel matrices and the move indices reported by the
solver, simulator and service.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class GameGraph:
    """Immutable directed game graph over positions 0..position_count-1.

    ``followers[v]`` is the ordered list of positions reachable in one move
    from ``v``; a position with no followers is terminal.  ``labels`` is
    opaque display text, one entry per position.
    """

    followers: tuple[tuple[int, ...], ...]
    start: int
    labels: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "followers", tuple(tuple(f) for f in self.followers))
        if not self.labels:
            object.__setattr__(
                self, "labels", tuple(str(v) for v in range(len(self.followers)))
            )
        else:
            object.__setattr__(self, "labels", tuple(self.labels))

    @property
    def position_count(self) -> int:
        return len(self.followers)

    def is_terminal(self, v: int) -> bool:
        return not self.followers[v]


@dataclass
class ValidationReport:
    """Accumulated structural violations; empty means valid."""

    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, message: str) -> None:
        self.violations.append(message)

    def __str__(self) -> str:
        return "ok" if self.ok else "\n".join(self.violations)


class GraphCycleError(ValueError):
    """The graph contains a cycle and cannot be evaluated bottom-up."""


def validate_graph(graph: GameGraph) -> ValidationReport:
    """Check index ranges, duplicate followers, start position and acyclicity."""
    report = ValidationReport()
    n = graph.position_count
    if n == 0:
        report.add("graph has no positions")
        return report
    if not 0 <= graph.start < n:
        report.add(f"start position {graph.start} out of range [0, {n})")
    if len(graph.labels) != n:
        report.add(f"{len(graph.labels)} labels for {n} positions")
    for v, follower_list in enumerate(graph.followers):
        seen: set[int] = set()
        for u in follower_list:
            if not 0 <= u < n:
                report.add(f"position {v}: dangling follower index {u}")
            elif u in seen:
                report.add(f"position {v}: duplicate follower {u}")
            seen.add(u)
    if not report.violations and _find_cycle(graph):
        report.add("graph contains a cycle: " + " -> ".join(map(str, _find_cycle(graph))))
    return report


def _find_cycle(graph: GameGraph) -> list[int] | None:
    """Return one cycle as a position list, or None. Iterative colouring DFS."""
    WHITE, GREY, BLACK = 0, 1, 2
    colour = [WHITE] * graph.position_count
    parent: dict[int, int] = {}
    for root in range(graph.position_count):
        if colour[root] != WHITE:
            continue
        stack: list[tuple[int, int]] = [(root, 0)]
        colour[root] = GREY
        while stack:
            v, i = stack[-1]
            if i < len(graph.followers[v]):
                stack[-1] = (v, i + 1)
                u = graph.followers[v][i]
                if colour[u] == GREY:
                    cycle = [u, v]
                    w = v
                    while w != u and w in parent:
                        w = parent[w]
                        cycle.append(w)
                    return list(reversed(cycle))
                if colour[u] == WHITE:
                    colour[u] = GREY
                    parent[u] = v
                    stack.append((u, 0))
            else:
                colour[v] = BLACK
                stack.pop()
    return None


def topological_order(graph: GameGraph) -> list[int]:
    """Order positions so every position appears after all of its followers.

    This is the evaluation order for backward induction: terminals come
    first, the start position (in a connected game) last.  Deterministic:
    among simultaneously ready positions the smallest index is emitted
    first via an index-ordered scan.

    Raises:
        GraphCycleError: the graph is not progressively bounded.
    """
    n = graph.position_count
    remaining = [len(f) for f in graph.followers]
    dependants: list[list[int]] = [[] for _ in range(n)]
    for v, follower_list in enumerate(graph.followers):
        for u in follower_list:
            dependants[u].append(v)
    ready = [v for v in range(n) if remaining[v] == 0]
    order: list[int] = []
    while ready:
        # pop the smallest ready index to keep the order reproducible
        v = min(ready)
        ready.remove(v)
        order.append(v)
        for w in dependants[v]:
            remaining[w] -= 1
            if remaining[w] == 0:
                ready.append(w)
    if len(order) != n:
        raise GraphCycleError("cycle detected: graph is not progressively bounded")
    return order


def terminals(graph: GameGraph) -> set[int]:
    """Positions with no followers (the player to move there loses)."""
    return {v for v in range(graph.position_count) if not graph.followers[v]}
