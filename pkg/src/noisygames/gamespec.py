"""Declarative game descriptions: builtin families or explicit graph + model.

A spec is a single JSON object.  Builtins carry a ``family`` discriminator:

    {"family": "nim1", "chips": 5, "p": 0.3}
    {"family": "nim", "piles": [2, 2]}
    {"family": "chomp", "rows": 2, "cols": 2, "variant": "n8", "p": 0.5}

Explicit games give the graph and the per-position matrices directly:

    {"graph": {"followers": [[], [0], [0, 1]], "start": 2, "labels": [...]},
     "model": [[], [[1.0]], [[0.5, 0.5], [0.1, 0.9]]]}

Resolution validates everything and attaches display metadata (board
payloads and move labels) used by the CLI and the play service.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any

from .errormodel import MoveErrorModel, equiprobable_model, validate_model
from .games.chomp import (
    CHOMP_VARIANTS,
    chomp_graph,
    chomp_model,
    chomp_moves,
    chomp_positions,
)
from .games.nim import nim1_graph, nim1_model, nim_multi_graph, nim_multi_positions
from .graph import GameGraph, validate_graph


class SpecError(ValueError):
    """The spec does not parse or does not resolve to a valid game."""


@dataclass(frozen=True)
class ResolvedGame:
    """A validated (graph, model) pair plus presentation metadata."""

    spec: dict
    family: str
    graph: GameGraph
    model: MoveErrorModel
    boards: tuple[dict, ...]
    move_labels: tuple[tuple[str, ...], ...]

    def board(self, v: int) -> dict:
        return self.boards[v]


def parse_spec_text(text: str) -> dict:
    """Parse JSON text into a spec object, with line-anchored errors."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    if not isinstance(obj, dict):
        raise SpecError("spec must be a JSON object")
    return obj


def load_spec_file(path: str) -> dict:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_spec_text(fh.read())


def _require(obj: dict, key: str, kind, what: str):
    if key not in obj:
        raise SpecError(f"{what}: missing required field {key!r}")
    value = obj[key]
    if kind is float:
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise SpecError(f"{what}: field {key!r} must be a number")
        return float(value)
    if kind is int:
        if isinstance(value, bool) or not isinstance(value, int):
            raise SpecError(f"{what}: field {key!r} must be an integer")
        return value
    if not isinstance(value, kind):
        raise SpecError(f"{what}: field {key!r} has wrong type")
    return value


def resolve_game_spec(obj: dict) -> ResolvedGame:
    """Build and validate the game a spec object describes.

    Raises:
        SpecError: unknown family, bad parameters, or invalid graph/model.
    """
    if "family" in obj:
        family = obj["family"]
        if family == "nim1":
            return _resolve_nim1(obj)
        if family == "nim":
            return _resolve_nim_multi(obj)
        if family == "chomp":
            return _resolve_chomp(obj)
        raise SpecError(f"unknown game family {family!r}")
    if "graph" in obj:
        return _resolve_explicit(obj)
    raise SpecError("spec needs either a 'family' or an explicit 'graph'")


def _resolve_nim1(obj: dict) -> ResolvedGame:
    if "chips" not in obj and "k" in obj:
        obj = {**obj, "chips": obj["k"]}
    k = _require(obj, "chips", int, "nim1 spec")
    p = _require(obj, "p", float, "nim1 spec")
    if k < 0:
        raise SpecError(f"nim1 spec: chips must be >= 0, got {k}")
    if not 0.0 <= p <= 1.0:
        raise SpecError(f"nim1 spec: p must lie in [0, 1], got {p}")
    graph = nim1_graph(k)
    model = nim1_model(k, p)
    boards = tuple({"kind": "nim1", "chips": m} for m in range(k + 1))
    move_labels = tuple(
        tuple(_chips_label(j) for j in range(m)) for m in range(k + 1)
    )
    spec = {"family": "nim1", "chips": k, "p": p}
    return ResolvedGame(spec, "nim1", graph, model, boards, move_labels)


def _chips_label(j: int) -> str:
    return "leave 1 chip" if j == 1 else f"leave {j} chips"


def _resolve_nim_multi(obj: dict) -> ResolvedGame:
    piles = _require(obj, "piles", list, "nim spec")
    if not piles or not all(isinstance(c, int) and not isinstance(c, bool) and c >= 0 for c in piles):
        raise SpecError(f"nim spec: piles must be non-negative integers, got {piles}")
    piles = tuple(piles)
    graph = nim_multi_graph(piles)
    model = equiprobable_model(graph)
    tuples = nim_multi_positions(piles)
    boards = tuple({"kind": "nim", "piles": list(t)} for t in tuples)
    move_labels = []
    for t in tuples:
        labels = []
        for i, c in enumerate(t):
            for x in range(c):
                labels.append(f"pile {i} to {x}")
        move_labels.append(tuple(labels))
    spec = {"family": "nim", "piles": list(piles)}
    return ResolvedGame(spec, "nim", graph, model, boards, tuple(move_labels))


def _resolve_chomp(obj: dict) -> ResolvedGame:
    n = _require(obj, "rows", int, "chomp spec")
    m = _require(obj, "cols", int, "chomp spec")
    variant = _require(obj, "variant", str, "chomp spec")
    if variant not in CHOMP_VARIANTS:
        raise SpecError(
            f"chomp spec: unknown variant {variant!r}, expected one of {CHOMP_VARIANTS}"
        )
    p = 0.0
    if variant != "uniform":
        p = _require(obj, "p", float, "chomp spec")
        if not 0.0 <= p <= 1.0:
            raise SpecError(f"chomp spec: p must lie in [0, 1], got {p}")
    if n < 1 or m < 1:
        raise SpecError(f"chomp spec: bar must be at least 1x1, got {n}x{m}")
    graph = chomp_graph(n, m)
    model = chomp_model(n, m, variant, p)
    positions = chomp_positions(n, m)
    boards = tuple(
        {"kind": "chomp", "rows": n, "cols": m, "heights": list(h)} for h in positions
    )
    move_labels = tuple(
        tuple(f"chomp at ({c}, {r})" for c, r in chomp_moves(h)) for h in positions
    )
    spec: dict[str, Any] = {"family": "chomp", "rows": n, "cols": m, "variant": variant}
    if variant != "uniform":
        spec["p"] = p
    return ResolvedGame(spec, "chomp", graph, model, boards, move_labels)


def _resolve_explicit(obj: dict) -> ResolvedGame:
    graph_obj = _require(obj, "graph", dict, "explicit spec")
    followers = _require(graph_obj, "followers", list, "explicit spec graph")
    start = _require(graph_obj, "start", int, "explicit spec graph")
    labels = graph_obj.get("labels")
    try:
        graph = GameGraph(
            followers=tuple(tuple(f) for f in followers),
            start=start,
            labels=tuple(labels) if labels else (),
        )
    except TypeError as exc:
        raise SpecError(f"explicit spec graph: {exc}") from exc
    report = validate_graph(graph)
    if not report.ok:
        raise SpecError(f"explicit spec graph: {report}")

    model_obj = _require(obj, "model", list, "explicit spec")
    try:
        model = MoveErrorModel(tuple(tuple(tuple(row) for row in mat) for mat in model_obj))
    except TypeError as exc:
        raise SpecError(f"explicit spec model: {exc}") from exc
    model_report = validate_model(model, graph)
    if not model_report.ok:
        raise SpecError(f"explicit spec model: {model_report}")

    boards = tuple({"kind": "graph", "label": graph.labels[v]} for v in range(graph.position_count))
    move_labels = tuple(
        tuple(f"move to {graph.labels[u]}" for u in graph.followers[v])
        for v in range(graph.position_count)
    )
    spec = serialize_explicit(graph, model)
    return ResolvedGame(spec, "explicit", graph, model, boards, move_labels)


def serialize_explicit(graph: GameGraph, model: MoveErrorModel) -> dict:
    """Spec object for an explicit game; re-parses to identical graph/model."""
    return {
        "graph": {
            "followers": [list(f) for f in graph.followers],
            "start": graph.start,
            "labels": list(graph.labels),
        },
        "model": [[list(row) for row in mat] for mat in model.rows],
    }
