"""Permanental polynomials of small graphs and purely imaginary per-spectra."""

from .polyexact import IntPoly, format_poly, parse_poly
from .graphcore import Graph, RootedGraph, RootedTreeSpec
from .permpoly import EngineKind, per_poly
from .spectra import PerSpecReport, classify_perspec, is_in_G

__all__ = [
    "IntPoly", "format_poly", "parse_poly",
    "Graph", "RootedGraph", "RootedTreeSpec",
    "EngineKind", "per_poly",
    "PerSpecReport", "classify_perspec", "is_in_G",
]
__version__ = "0.1.0"
