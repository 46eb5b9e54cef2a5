"""
Named curves used throughout the classification: the trivial projection, the curve shaped
like infinity, the trefoil, figure-eight and cinquefoil curves, P_Y, the flower P_F, its
companion P_C, the 7_4 curve and the clasp.
"""

from collections.abc import Callable, Sequence
from functools import lru_cache

from ..errors import GaussCodeError
from .curve_core import TRIVIAL, KnotProjection, realize


def closed_braid(generators: Sequence[int], strands: int) -> KnotProjection:
    """
    Projection of the closure of a braid word.

    Args:
        generators: Indices i of the generators sigma_i (1 <= i < strands), in braid order
        strands: Number of strands

    Raises:
        GaussCodeError: If the closure has more than one component
    """
    if any(not 1 <= g < strands for g in generators):
        raise GaussCodeError(f"generators {list(generators)} out of range for {strands} strands")
    word: list[int] = []
    position = 1
    for _ in range(strands):
        for label, g in enumerate(generators, start=1):
            if position == g:
                word.append(label)
                position = g + 1
            elif position == g + 1:
                word.append(label)
                position = g
        if position == 1:
            break
    if len(word) != 2 * len(generators):
        raise GaussCodeError(f"closure of braid {list(generators)} is not a single curve")
    return realize(word)


def trivial() -> KnotProjection:
    return TRIVIAL


def infinity() -> KnotProjection:
    return realize((1, 1))


def trefoil() -> KnotProjection:
    return realize((1, 2, 3, 1, 2, 3))


def figure_eight() -> KnotProjection:
    return realize((1, 2, 3, 1, 4, 3, 2, 4))


def cinquefoil() -> KnotProjection:
    return realize((1, 2, 3, 4, 5, 1, 2, 3, 4, 5))


def p_y() -> KnotProjection:
    """Three kinks on one side of a circle: no 2-gons, one coherent 3-gon."""
    return KnotProjection((1, 1, 2, 2, 3, 3), (-1, -1, -1))


def flower() -> KnotProjection:
    """Four-petal flower: closure of (s1 s2)^4 on three strands."""
    return closed_braid((1, 2) * 4, 3)


def flower_companion() -> KnotProjection:
    """The flower after one weak RIII: closure of s2 s1 s2 s2 s1 s2 s1 s2."""
    return closed_braid((2, 1, 2, 2, 1, 2, 1, 2), 3)


def seven_four() -> KnotProjection:
    return realize((1, 2, 3, 4, 5, 1, 6, 7, 4, 3, 2, 5, 7, 6))


def clasp() -> KnotProjection:
    """Two kinks on the same side of a circle, as produced by one strong RII on O."""
    return KnotProjection((1, 2, 2, 1), (-1, 1))


CATALOG: dict[str, Callable[[], KnotProjection]] = {
    "O": trivial,
    "INF": infinity,
    "T3": trefoil,
    "F4": figure_eight,
    "T5": cinquefoil,
    "PY": p_y,
    "PF": flower,
    "PC": flower_companion,
    "S74": seven_four,
    "CLASP": clasp,
}


@lru_cache(maxsize=None)
def get_curve(name: str) -> KnotProjection:
    """
    Catalog curve by name (case-insensitive, optional leading `@`).

    Raises:
        KeyError: For unknown names
    """
    normalized = name.lstrip("@").upper()
    if normalized not in CATALOG:
        raise KeyError(f"unknown catalog curve {name!r}; known: {', '.join(CATALOG)}")
    return CATALOG[normalized]()
