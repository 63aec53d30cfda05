"""Cubic graphs with a cyclic-quotient 2-factor: constructions, closed-form
automorphisms, a brute-force automorphism oracle and survey tooling."""

from .constructions import (
    Case,
    TheoremCase,
    XbParams,
    build_htg,
    build_mobius_or_prism,
    build_xb,
    build_xb1,
    build_xb2,
    classify_theorem_case,
    validate_xb,
)
from .graph_core import EdgeClass, FactorGraph, VertexId, export, girth

__version__ = "0.1.0"

__all__ = [
    "Case",
    "TheoremCase",
    "XbParams",
    "build_htg",
    "build_mobius_or_prism",
    "build_xb",
    "build_xb1",
    "build_xb2",
    "classify_theorem_case",
    "validate_xb",
    "EdgeClass",
    "FactorGraph",
    "VertexId",
    "export",
    "girth",
]
