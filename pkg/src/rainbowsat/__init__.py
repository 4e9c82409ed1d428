"""Rainbow saturation of edge-colored graphs: constructions, verification, classification."""

from .constructions import ConstructionOutput
from .embed import Embedding, creates_rainbow, find_copy_through, find_rainbow_copy
from .errors import ParseError, RainbowSatError
from .graph import ColoredGraph, Pattern, add_colored_edge, non_edges, sees_color
from .io import format_graph, read_graph, write_graph
from .patterns import parse_pattern
from .saturation import (SaturationCertificate, exact_sat, is_saturated, saturation_closure,
                         verify_saturated)
from .structure import Growth, GrowthClass, classify, find_special_edge, profile

__version__ = "0.1.0"

__all__ = [
    "ColoredGraph", "ConstructionOutput", "Embedding", "Growth", "GrowthClass", "ParseError", "Pattern",
    "RainbowSatError", "SaturationCertificate", "add_colored_edge", "classify", "creates_rainbow",
    "exact_sat", "find_copy_through", "find_rainbow_copy", "find_special_edge", "format_graph",
    "is_saturated", "non_edges", "parse_pattern", "profile", "read_graph", "saturation_closure",
    "sees_color", "verify_saturated", "write_graph",
]
