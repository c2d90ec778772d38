"""Restricted edge-connectivity of replacement products and Cayley graphs."""

__version__ = "0.1.0"

from .connectivity import (
    ConnectivityReport,
    LambdaPrimeOptions,
    classify,
    edge_connectivity,
    lambda_prime_atom,
    restricted_edge_connectivity,
    restricted_edge_connectivity_bruteforce,
    vertex_connectivity,
)
from .families import circulant, complete, cycle, hypercube, random_regular, star
from .graph import CutCertificate, Graph, GraphError, RotationMap, make_graph, validate_certificate
from .replacement import ccc, default_rotation_map, replacement_product

__all__ = [
    "ConnectivityReport",
    "CutCertificate",
    "Graph",
    "GraphError",
    "LambdaPrimeOptions",
    "RotationMap",
    "ccc",
    "circulant",
    "classify",
    "complete",
    "cycle",
    "default_rotation_map",
    "edge_connectivity",
    "hypercube",
    "lambda_prime_atom",
    "make_graph",
    "random_regular",
    "replacement_product",
    "restricted_edge_connectivity",
    "restricted_edge_connectivity_bruteforce",
    "star",
    "validate_certificate",
    "vertex_connectivity",
]
