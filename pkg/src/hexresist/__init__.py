"""Exact resistance distances on linear hexagonal chains and hexagonal cylinders."""

from .network import Edge, NetworkError, ResistorNetwork
from .oracle import effective_resistance, kirchhoff_index, pseudo_inverse, resistance_matrix
from .quadfield import ALPHA, ONE, SQRT2, ZERO, QuadNum, parse_quad, to_decimal

__version__ = "0.1.0"

__all__ = [
    "ALPHA",
    "ONE",
    "SQRT2",
    "ZERO",
    "Edge",
    "NetworkError",
    "QuadNum",
    "ResistorNetwork",
    "effective_resistance",
    "kirchhoff_index",
    "parse_quad",
    "pseudo_inverse",
    "resistance_matrix",
    "to_decimal",
]
