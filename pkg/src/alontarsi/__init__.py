"""Alon-Tarsi certificates for K5-minor-free graphs."""
from .errors import (ContractViolation, GraphFormatError, K5MinorError, MalformedInputError, PreconditionError,
                     ResourceLimitError)
from .graph import Graph, Orientation, Signature, format_graph, parse_graph

__version__ = "0.1.0"

__all__ = [
    "ContractViolation", "Graph", "GraphFormatError", "K5MinorError", "MalformedInputError", "Orientation",
    "PreconditionError", "ResourceLimitError", "Signature", "format_graph", "parse_graph",
]
