"""Generalized associahedra for finite crystallographic root systems.

Root catalogs, the tropical Coxeter transformations, compatibility degrees,
clusters and cluster expansions, and exact polytopal realizations from a
support function.
"""

from .cartan import CartanType, RootCatalog, build_root_system, parse_cartan_type
from .clusters import cluster_expansion, enumerate_clusters, expansion_table
from .compat import compatibility_degree
from .polytope import (
    PolytopeRealization, SupportFunction, SupportFunctionError, build_support_function,
    realize,
)
from .report import Report

__all__ = [
    "CartanType", "RootCatalog", "build_root_system", "parse_cartan_type",
    "cluster_expansion", "enumerate_clusters", "expansion_table",
    "compatibility_degree",
    "PolytopeRealization", "SupportFunction", "SupportFunctionError",
    "build_support_function", "realize",
    "Report",
]

__version__ = "0.1.0"
