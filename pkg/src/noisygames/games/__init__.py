"""Built-in game families: 1-pile Nim over a bit-flip channel, multi-pile
Nim with the equiprobable channel, and Chomp with its four error variants."""

from .chomp import (
    CHOMP_VARIANTS,
    chomp_graph,
    chomp_model,
    chomp_moves,
    chomp_positions,
)
from .nim import (
    hamming,
    nim1_graph,
    nim1_model,
    nim1_solution_curve,
    nim_multi_expected_class,
    nim_multi_graph,
)

__all__ = [
    "CHOMP_VARIANTS",
    "chomp_graph",
    "chomp_model",
    "chomp_moves",
    "chomp_positions",
    "hamming",
    "nim1_graph",
    "nim1_model",
    "nim1_solution_curve",
    "nim_multi_expected_class",
    "nim_multi_graph",
]
