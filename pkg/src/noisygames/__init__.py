"""Combinatorial games played through noisy channels: solve, simulate, play."""

from .errormodel import (
    MoveErrorModel,
    equiprobable_model,
    identity_model,
    perturb,
    validate_model,
)
from .graph import (
    GameGraph,
    GraphCycleError,
    ValidationReport,
    terminals,
    topological_order,
    validate_graph,
)
from .gamespec import ResolvedGame, SpecError, resolve_game_spec
from .montecarlo import (
    SimulationReport,
    Strategy,
    estimate_win_probability,
    play_game,
    sample_received_move,
)
from .solver import (
    SolvedGame,
    classify,
    fair_chance_hypotheses,
    move_values,
    solve,
)

__all__ = [
    "GameGraph",
    "GraphCycleError",
    "MoveErrorModel",
    "ResolvedGame",
    "SimulationReport",
    "SolvedGame",
    "SpecError",
    "Strategy",
    "ValidationReport",
    "resolve_game_spec",
    "classify",
    "equiprobable_model",
    "estimate_win_probability",
    "fair_chance_hypotheses",
    "identity_model",
    "move_values",
    "perturb",
    "play_game",
    "sample_received_move",
    "solve",
    "terminals",
    "topological_order",
    "validate_graph",
    "validate_model",
]

__version__ = "0.1.0"
