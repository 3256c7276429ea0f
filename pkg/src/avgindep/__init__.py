"""Exact average size of independent sets, with exhaustive extremal checks."""

from .engine import (
    IndependencePoly,
    InvariantSummary,
    avi,
    brute_force_poly,
    indep_poly,
    summary,
    weighted_summary,
)
from .graph import Graph, complete, empty, figure1_tree, from_spec, path, star
from .quadfield import QuadNumber, golden_power

__all__ = [
    "Graph",
    "IndependencePoly",
    "InvariantSummary",
    "QuadNumber",
    "avi",
    "brute_force_poly",
    "complete",
    "empty",
    "figure1_tree",
    "from_spec",
    "golden_power",
    "indep_poly",
    "path",
    "star",
    "summary",
    "weighted_summary",
]
