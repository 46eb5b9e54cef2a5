"""Knot projections: Gauss codes, realization, canonical keys, faces and named curves."""

from .catalog import CATALOG, closed_braid, get_curve
from .curve_core import (
    TRIVIAL,
    CanonicalKey,
    GaussCode,
    KnotProjection,
    SumDecomposition,
    canonical_form,
    canonical_key,
    connected_sum,
    connected_sum_decompose,
    decompose_with_gluing,
    in_strong13_family,
    mirror,
    parse_gauss_code,
    projection_from_key,
    read_gauss_file,
    realizations,
    realize,
    reassemble,
    reread,
)
from .faces import (
    CircleArrangement,
    Coherence,
    Face,
    big_c,
    circle_number,
    coh_odd,
    faces,
    invariant_summary,
    seifert_number,
    seifert_state,
    tau_state,
)

__all__ = [
    "CATALOG",
    "TRIVIAL",
    "CanonicalKey",
    "CircleArrangement",
    "Coherence",
    "Face",
    "GaussCode",
    "KnotProjection",
    "SumDecomposition",
    "big_c",
    "canonical_form",
    "canonical_key",
    "circle_number",
    "closed_braid",
    "coh_odd",
    "connected_sum",
    "connected_sum_decompose",
    "decompose_with_gluing",
    "faces",
    "get_curve",
    "in_strong13_family",
    "invariant_summary",
    "mirror",
    "parse_gauss_code",
    "projection_from_key",
    "read_gauss_file",
    "realizations",
    "realize",
    "reassemble",
    "reread",
    "seifert_number",
    "seifert_state",
    "tau_state",
]
