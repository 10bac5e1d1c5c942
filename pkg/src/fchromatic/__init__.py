"""Colored spanning forests: decide, construct, certify, and check sufficient conditions."""

from ._backend import NAME as BACKEND
from .certify import Certificate, Verdict, check_forest_condition, check_heterochromatic_tree, check_rainbow_forest
from .construct import build_forest
from .errors import (
    BudgetError,
    CapacityError,
    FChromaticError,
    GraphError,
    ParseError,
    PreconditionError,
)
from .graph import (
    ColorBudget,
    Edge,
    EdgeColoredGraph,
    SpanningForest,
    build_graph,
    color_multiplicity,
    components,
    edges_with_colors,
    is_f_chromatic,
    remove_colors,
    validate_spanning_forest,
)

__all__ = [
    "BACKEND", "BudgetError", "CapacityError", "Certificate", "ColorBudget", "Edge",
    "EdgeColoredGraph", "FChromaticError", "GraphError", "ParseError", "PreconditionError",
    "SpanningForest", "Verdict", "build_forest", "build_graph", "check_forest_condition",
    "check_heterochromatic_tree", "check_rainbow_forest", "color_multiplicity", "components",
    "edges_with_colors", "is_f_chromatic", "remove_colors", "validate_spanning_forest",
]
