"""Exact computations on binomial edge ideals J_G of simple graphs."""
from .betti import BettiTable, projective_dimension, regularity
from .errors import (
    BettiLabError,
    CapExceededError,
    OracleBudgetError,
    ShapeError,
    UnsupportedFamilyError,
    ValidationError,
)
from .graphs import FamilySpec, Graph, build_family, graph_from_json

__all__ = [
    "BettiLabError",
    "BettiTable",
    "CapExceededError",
    "FamilySpec",
    "Graph",
    "OracleBudgetError",
    "ShapeError",
    "UnsupportedFamilyError",
    "ValidationError",
    "build_family",
    "graph_from_json",
    "projective_dimension",
    "regularity",
]
