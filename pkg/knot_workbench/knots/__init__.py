"""Knot diagrams over projections and the polynomial invariants computed from them."""

from .knot_layer import (
    KnotDiagram,
    canonical_genus,
    is_unknot,
    jones,
    jones_table,
    kauffman_bracket,
    knot_summary,
    lift_K,
    trivializing_number,
    w_invariant,
)
from .laurent import LaurentPoly

__all__ = [
    "KnotDiagram",
    "LaurentPoly",
    "canonical_genus",
    "is_unknot",
    "jones",
    "jones_table",
    "kauffman_bracket",
    "knot_summary",
    "lift_K",
    "trivializing_number",
    "w_invariant",
]
