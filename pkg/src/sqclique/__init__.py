"""Cliques in squares of sparse graphs: constructions, exact measurements and extraction."""

from .analysis import (
    DegeneracyCertificate,
    SquareDegeneracyReport,
    brute_force_mad,
    degeneracy,
    degeneracy_order,
    exhaustive_degeneracy,
    is_k_degeneracy_order,
    mad,
    square,
    square_degeneracy_report,
)
from .clique import CliqueWitness, brute_force_max_clique, clique_number, max_clique
from .graph import GraphError, LoopError, Multigraph, SimpleGraph, VertexOrder
from .io import GraphDocument, GraphParseError, from_json, load, to_json

__all__ = [
    "CliqueWitness",
    "DegeneracyCertificate",
    "GraphDocument",
    "GraphError",
    "GraphParseError",
    "LoopError",
    "Multigraph",
    "SimpleGraph",
    "SquareDegeneracyReport",
    "VertexOrder",
    "brute_force_mad",
    "brute_force_max_clique",
    "clique_number",
    "degeneracy",
    "degeneracy_order",
    "exhaustive_degeneracy",
    "from_json",
    "is_k_degeneracy_order",
    "load",
    "mad",
    "max_clique",
    "square",
    "square_degeneracy_report",
    "to_json",
]
