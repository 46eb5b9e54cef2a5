"""
The seven monotone reduction systems and the decision procedures they give.

Each system removes 1-gons and/or 2-gons of a given coherence until none is left. The
fixed point is unique up to sphere isotopy, so comparing canonical keys of the reduced
curves decides equivalence under the matching move set.
"""

import random
from dataclasses import dataclass, field
from enum import Enum

from ..curves.curve_core import CanonicalKey, KnotProjection, canonical_form, canonical_key
from ..errors import UndecidableSystemError
from ..util.logger_config import logger
from .moves import AppliedMove, MoveKind, MoveSet, MoveType, apply, face_sites


class ReductionSystem(str, Enum):
    R1 = "1r"
    R2 = "2r"
    R = "r"
    SR = "sr"
    WR = "wr"
    S2R = "2sr"
    W2R = "2wr"

    @property
    def kinds(self) -> frozenset[MoveKind]:
        return _SYSTEM_KINDS[self]

    @property
    def move_set(self) -> MoveSet:
        return MoveSet(frozenset(kind.move_type for kind in self.kinds))

    @classmethod
    def parse(cls, text: str) -> "ReductionSystem":
        normalized = text.strip().lower().lstrip("p^").replace("_", "")
        for system in cls:
            if normalized in (system.value, system.name.lower()):
                return system
        raise ValueError(f"unknown reduction system {text!r}")


_SYSTEM_KINDS = {
    ReductionSystem.R1: frozenset({MoveKind.RI_DOWN}),
    ReductionSystem.R2: frozenset({MoveKind.SRII_DOWN, MoveKind.WRII_DOWN}),
    ReductionSystem.R: frozenset({MoveKind.RI_DOWN, MoveKind.SRII_DOWN, MoveKind.WRII_DOWN}),
    ReductionSystem.SR: frozenset({MoveKind.RI_DOWN, MoveKind.SRII_DOWN}),
    ReductionSystem.WR: frozenset({MoveKind.RI_DOWN, MoveKind.WRII_DOWN}),
    ReductionSystem.S2R: frozenset({MoveKind.SRII_DOWN}),
    ReductionSystem.W2R: frozenset({MoveKind.WRII_DOWN}),
}


def system_for(moves: MoveSet) -> ReductionSystem:
    """
    Reduction system deciding the given move set.

    Raises:
        UndecidableSystemError: For move sets outside the seven decidable ones
    """
    for system in ReductionSystem:
        if system.move_set == moves:
            return system
    raise UndecidableSystemError(
        f"no canonical form for {moves.label}; use the search module instead"
    )


def is_decidable(moves: MoveSet) -> bool:
    try:
        system_for(moves)
    except UndecidableSystemError:
        return False
    return True


def reduction_path(
    projection: KnotProjection,
    system: ReductionSystem,
    rng: random.Random | None = None,
) -> tuple[KnotProjection, list[AppliedMove]]:
    """
    Reduce to the fixed point, recording every move.

    Without `rng` the lexicographically least down-site is taken at each step; with it a
    uniformly random legal site is taken. Every step works on the canonical representative,
    so each recorded site replays on the curve named by its `before` key.
    """
    moves: list[AppliedMove] = []
    current = canonical_form(projection)
    while True:
        sites = face_sites(current, system.kinds)
        if not sites:
            return current, moves
        site = sites[0] if rng is None else rng.choice(sites)
        following = canonical_form(apply(current, site))
        moves.append(AppliedMove(site, current.key, following.key))
        current = following


def reduce(
    projection: KnotProjection, system: ReductionSystem, rng: random.Random | None = None
) -> KnotProjection:
    """P^{1r}, P^{2r}, P^r, P^{sr}, P^{wr}, P^{2sr} or P^{2wr}."""
    return reduction_path(projection, system, rng)[0]


@dataclass(frozen=True)
class ReductionCertificate:
    """Both reduction sequences and the keys of their end points."""

    system: ReductionSystem
    equal: bool
    keys: tuple[CanonicalKey, CanonicalKey]
    paths: tuple[tuple[AppliedMove, ...], tuple[AppliedMove, ...]] = field(default=((), ()))
    crossings: tuple[int, int] = (0, 0)

    def to_dict(self) -> dict:
        return {
            "system": self.system.value,
            "equal": self.equal,
            "keys": list(self.keys),
            "reduced_crossings": list(self.crossings),
            "paths": [[move.to_dict() for move in path] for path in self.paths],
        }


def decide_equiv(
    first: KnotProjection,
    second: KnotProjection,
    system: ReductionSystem | MoveSet,
    allow_reflection: bool = False,
) -> tuple[bool, ReductionCertificate]:
    """
    Decide equivalence under a decidable move set by comparing reduced canonical keys.

    Raises:
        UndecidableSystemError: If a move set without a reduction system is given
    """
    if isinstance(system, MoveSet):
        system = system_for(system)
    reduced_first, path_first = reduction_path(first, system)
    reduced_second, path_second = reduction_path(second, system)
    keys = (
        canonical_key(reduced_first, allow_reflection),
        canonical_key(reduced_second, allow_reflection),
    )
    equal = keys[0] == keys[1]
    logger.debug(f"decide_equiv[{system.value}]: {keys[0]} vs {keys[1]} -> {equal}")
    return equal, ReductionCertificate(
        system=system,
        equal=equal,
        keys=keys,
        paths=(tuple(path_first), tuple(path_second)),
        crossings=(reduced_first.crossings, reduced_second.crossings),
    )


def min_crossings_in_class(projection: KnotProjection, system: ReductionSystem | MoveSet) -> int:
    """Least crossing number in the class of P: the reduced curve is a minimum."""
    if isinstance(system, MoveSet):
        system = system_for(system)
    return reduce(projection, system).crossings


DECIDABLE_MOVE_SETS = tuple(system.move_set for system in ReductionSystem)

__all__ = [
    "DECIDABLE_MOVE_SETS",
    "MoveType",
    "ReductionCertificate",
    "ReductionSystem",
    "decide_equiv",
    "is_decidable",
    "min_crossings_in_class",
    "reduce",
    "reduction_path",
    "system_for",
]
