"""Exact maximum cut for proper interval graphs via bubble models."""

from .bubble import (
    BubbleModel,
    ModelError,
    Violation,
    build_bubble_model,
    clique_model,
    dense_model,
    random_model,
    realize_graph,
    umbrella_ordering,
    validate_model,
)
from .dp import SolveResult, count_bound, solve_max_cut
from .exact import SolverLimitError
from .graph import Graph, ParseError, complement_cut, cut_size, format_edge_list, parse_edge_list
from .oracle import brute_force_max_cut, exhaustive_proper_interval_check, verify_dp

__all__ = [
    "BubbleModel",
    "Graph",
    "ModelError",
    "ParseError",
    "SolveResult",
    "SolverLimitError",
    "Violation",
    "brute_force_max_cut",
    "build_bubble_model",
    "clique_model",
    "complement_cut",
    "count_bound",
    "cut_size",
    "dense_model",
    "exhaustive_proper_interval_check",
    "format_edge_list",
    "parse_edge_list",
    "random_model",
    "realize_graph",
    "solve_max_cut",
    "umbrella_ordering",
    "validate_model",
    "verify_dp",
]
