"""Equivalence search, fixed-crossing class exhaustion, corpus enumeration and macros."""

from .corpus import cross_check, double_occurrence_words, enumerate_corpus, move_closure
from .macros import MACRO_TEMPLATES, expand_macro, simulate_move, untangle
from .search import (
    NotFound,
    SearchResult,
    Witness,
    connecting_site,
    equiv_witness,
    find_in_class,
    reachable_fixed_c,
    replay,
    verify_witness,
)

__all__ = [
    "MACRO_TEMPLATES",
    "NotFound",
    "SearchResult",
    "Witness",
    "connecting_site",
    "cross_check",
    "double_occurrence_words",
    "enumerate_corpus",
    "equiv_witness",
    "expand_macro",
    "find_in_class",
    "move_closure",
    "reachable_fixed_c",
    "replay",
    "simulate_move",
    "untangle",
    "verify_witness",
]
