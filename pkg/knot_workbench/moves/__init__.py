"""Reidemeister moves on projections and the monotone reduction systems."""

from .moves import (
    AppliedMove,
    MoveKind,
    MoveSet,
    MoveSite,
    MoveType,
    apply,
    apply_sequence,
    enumerate_moves,
    face_sites,
    inverse_site,
    neighbours,
)
from .reduce import (
    DECIDABLE_MOVE_SETS,
    ReductionCertificate,
    ReductionSystem,
    decide_equiv,
    is_decidable,
    min_crossings_in_class,
    reduce,
    reduction_path,
    system_for,
)

__all__ = [
    "DECIDABLE_MOVE_SETS",
    "AppliedMove",
    "MoveKind",
    "MoveSet",
    "MoveSite",
    "MoveType",
    "ReductionCertificate",
    "ReductionSystem",
    "apply",
    "apply_sequence",
    "decide_equiv",
    "enumerate_moves",
    "face_sites",
    "inverse_site",
    "is_decidable",
    "min_crossings_in_class",
    "neighbours",
    "reduce",
    "reduction_path",
    "system_for",
]
