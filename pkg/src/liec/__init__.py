"""Locally irregular edge-colorings: exact search, constructions, enumeration."""

from .graph import Graph, GraphError, GraphFormatError, emit_graph6, parse_graph6
from .solver import EdgeColoring, SearchBudgetExceeded, chi_irr, exists_k_liec, verify_liec

__all__ = [
    "Graph", "GraphError", "GraphFormatError", "emit_graph6", "parse_graph6",
    "EdgeColoring", "SearchBudgetExceeded", "chi_irr", "exists_k_liec", "verify_liec",
]
__version__ = "0.1.0"
