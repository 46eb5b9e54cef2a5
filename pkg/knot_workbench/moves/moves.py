"""
The five Reidemeister move types on knot projections, in both directions, as local
rewrites of the Gauss word.

Sites are anchored on darts of the projection they belong to:
  - RI down: the dart of a 1-gon
  - RII down / RIII: the darts of a simple 2-gon / 3-gon
  - RI up: (arc, turn), a kink of configuration sign `turn` inserted on the arc
  - RII up: (d1, d2), two darts of one face on different arcs; the arc of d1 is pushed
    across the arc of d2. O has no darts and uses (-1, side) for its two faces.
"""

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from enum import Enum

from ..curves.curve_core import CanonicalKey, KnotProjection
from ..curves.faces import Face, face_index_of_darts, faces
from ..errors import IllegalSiteError


class MoveType(str, Enum):
    RI = "RI"
    SRII = "sRII"
    WRII = "wRII"
    SRIII = "sRIII"
    WRIII = "wRIII"


MOVE_TYPE_ORDER = (MoveType.RI, MoveType.SRII, MoveType.WRII, MoveType.SRIII, MoveType.WRIII)


class MoveKind(str, Enum):
    RI_DOWN = "RI_down"
    SRII_DOWN = "SRII_down"
    WRII_DOWN = "WRII_down"
    SRIII = "SRIII"
    WRIII = "WRIII"
    RI_UP = "RI_up"
    SRII_UP = "SRII_up"
    WRII_UP = "WRII_up"

    @property
    def move_type(self) -> MoveType:
        return _KIND_TYPE[self]

    @property
    def delta(self) -> int:
        """Change of the crossing number."""
        return _KIND_DELTA[self]

    @property
    def inverse(self) -> "MoveKind":
        return _KIND_INVERSE[self]


_KIND_TYPE = {
    MoveKind.RI_UP: MoveType.RI,
    MoveKind.RI_DOWN: MoveType.RI,
    MoveKind.SRII_UP: MoveType.SRII,
    MoveKind.SRII_DOWN: MoveType.SRII,
    MoveKind.WRII_UP: MoveType.WRII,
    MoveKind.WRII_DOWN: MoveType.WRII,
    MoveKind.SRIII: MoveType.SRIII,
    MoveKind.WRIII: MoveType.WRIII,
}
_KIND_DELTA = {
    MoveKind.RI_UP: 1,
    MoveKind.RI_DOWN: -1,
    MoveKind.SRII_UP: 2,
    MoveKind.SRII_DOWN: -2,
    MoveKind.WRII_UP: 2,
    MoveKind.WRII_DOWN: -2,
    MoveKind.SRIII: 0,
    MoveKind.WRIII: 0,
}
_KIND_INVERSE = {
    MoveKind.RI_UP: MoveKind.RI_DOWN,
    MoveKind.RI_DOWN: MoveKind.RI_UP,
    MoveKind.SRII_UP: MoveKind.SRII_DOWN,
    MoveKind.SRII_DOWN: MoveKind.SRII_UP,
    MoveKind.WRII_UP: MoveKind.WRII_DOWN,
    MoveKind.WRII_DOWN: MoveKind.WRII_UP,
    MoveKind.SRIII: MoveKind.SRIII,
    MoveKind.WRIII: MoveKind.WRIII,
}
KIND_ORDER = {kind: i for i, kind in enumerate(MoveKind)}

_TYPE_ALIASES = {
    "ri": (MoveType.RI,),
    "srii": (MoveType.SRII,),
    "wrii": (MoveType.WRII,),
    "sriii": (MoveType.SRIII,),
    "wriii": (MoveType.WRIII,),
    "rii": (MoveType.SRII, MoveType.WRII),
    "riii": (MoveType.SRIII, MoveType.WRIII),
}


@dataclass(frozen=True)
class MoveSet:
    """A subset of {RI, sRII, wRII, sRIII, wRIII}; both directions of each type are allowed."""

    types: frozenset[MoveType] = frozenset()

    @classmethod
    def of(cls, *types: MoveType | str) -> "MoveSet":
        return cls(frozenset(MoveType(t) if isinstance(t, str) else t for t in types))

    @classmethod
    def parse(cls, text: str) -> "MoveSet":
        """Parse a comma separated list such as "RI,wRII,sRIII" (RII/RIII mean both kinds)."""
        chosen: set[MoveType] = set()
        for token in text.replace(" ", "").split(","):
            if not token:
                continue
            alias = token.lower().replace("strong", "s").replace("weak", "w")
            if alias not in _TYPE_ALIASES:
                raise ValueError(f"unknown move type {token!r}")
            chosen.update(_TYPE_ALIASES[alias])
        return cls(frozenset(chosen))

    @classmethod
    def full(cls) -> "MoveSet":
        return cls(frozenset(MoveType))

    def __contains__(self, item: object) -> bool:
        if isinstance(item, MoveKind):
            return item.move_type in self.types
        return item in self.types

    def __iter__(self):
        return (t for t in MOVE_TYPE_ORDER if t in self.types)

    def __len__(self) -> int:
        return len(self.types)

    def __le__(self, other: "MoveSet") -> bool:
        return self.types <= other.types

    def __or__(self, other: "MoveSet") -> "MoveSet":
        return MoveSet(self.types | other.types)

    @property
    def kinds(self) -> tuple[MoveKind, ...]:
        return tuple(kind for kind in MoveKind if kind.move_type in self.types)

    @property
    def label(self) -> str:
        return "{" + ", ".join(t.value for t in self) + "}"

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True, order=True)
class MoveSite:
    """An applicable move at a location of one specific projection."""

    kind: MoveKind
    anchor: tuple[int, ...]

    def sort_key(self) -> tuple:
        return (KIND_ORDER[self.kind], self.anchor)

    def to_dict(self) -> dict:
        return {"kind": self.kind.value, "anchor": list(self.anchor)}

    @classmethod
    def from_dict(cls, data: dict) -> "MoveSite":
        return cls(MoveKind(data["kind"]), tuple(int(a) for a in data["anchor"]))


@dataclass(frozen=True)
class AppliedMove:
    """Replayable record: the site was applied to the curve with key `before`."""

    site: MoveSite
    before: CanonicalKey
    after: CanonicalKey

    @property
    def kind(self) -> MoveKind:
        return self.site.kind

    def to_dict(self) -> dict:
        return {**self.site.to_dict(), "before": self.before, "after": self.after}

    @classmethod
    def from_dict(cls, data: dict) -> "AppliedMove":
        return cls(
            MoveSite.from_dict(data), CanonicalKey(data["before"]), CanonicalKey(data["after"])
        )


def _down_kind(face: Face) -> MoveKind | None:
    if face.degree == 1:
        return MoveKind.RI_DOWN
    if not face.is_simple:
        return None
    if face.degree == 2:
        return MoveKind.SRII_DOWN if face.is_coherent else MoveKind.WRII_DOWN
    if face.degree == 3:
        return MoveKind.SRIII if face.is_coherent else MoveKind.WRIII
    return None


def _rii_up_kind(projection: KnotProjection, d1: int, d2: int) -> MoveKind:
    same_direction = projection.is_forward(d1) == projection.is_forward(d2)
    return MoveKind.SRII_UP if same_direction else MoveKind.WRII_UP


def enumerate_moves(
    projection: KnotProjection, allowed: Iterable[MoveType] | None = None
) -> list[MoveSite]:
    """
    Every legal move site of the allowed types, sorted by kind and anchor.

    Down and RIII sites come from faces: 1-gons, simple 2-gons and simple 3-gons split by
    coherence. Up sites: a kink on either side of every arc, and every pair of darts on
    different arcs of a common face.
    """
    types = set(MoveType) if allowed is None else set(allowed)
    sites: list[MoveSite] = []
    face_list = faces(projection)

    for face in face_list:
        kind = _down_kind(face)
        if kind is not None and kind.move_type in types:
            anchor = face.darts if kind is MoveKind.RI_DOWN else tuple(sorted(face.darts))
            sites.append(MoveSite(kind, anchor))

    if MoveType.RI in types:
        for arc in range(max(len(projection.word), 1)):
            for turn in (-1, 1):
                sites.append(MoveSite(MoveKind.RI_UP, (arc, turn)))

    if types & {MoveType.SRII, MoveType.WRII}:
        if projection.is_trivial:
            if MoveType.SRII in types:
                sites.extend(MoveSite(MoveKind.SRII_UP, (-1, side)) for side in (-1, 1))
        else:
            for face in face_list:
                darts = sorted(face.darts)
                for i, d1 in enumerate(darts):
                    for d2 in darts[i + 1 :]:
                        if d1 >> 1 == d2 >> 1:
                            continue
                        kind = _rii_up_kind(projection, d1, d2)
                        if kind.move_type in types:
                            sites.append(MoveSite(kind, (d1, d2)))

    sites.sort(key=MoveSite.sort_key)
    return sites


def _assemble(
    projection: KnotProjection,
    tokens: Sequence[int | tuple[str, int]],
    new_signs: dict[str, int] | None = None,
) -> KnotProjection:
    """
    Build a projection from a traversal of old passages (old positions) and new passages
    (tag, 0 or 1). A new crossing's sign is the frame orientation of (passage 0, passage 1);
    old crossings keep their geometric frame.
    """
    new_signs = new_signs or {}
    relabel: dict[object, int] = {}
    word: list[int] = []
    signs: list[int] = []
    for token in tokens:
        if isinstance(token, int):
            label = projection.word[token]
            key: object = label
            base = projection.signs[label - 1]
            reads_first = token == projection.first_positions[label - 1]
        else:
            tag, passage = token
            key = ("new", tag)
            base = new_signs[tag]
            reads_first = passage == 0
        if key not in relabel:
            relabel[key] = len(relabel) + 1
            signs.append(base if reads_first else -base)
        word.append(relabel[key])
    result = KnotProjection(tuple(word), tuple(signs))
    if not result.euler_ok():
        raise IllegalSiteError(f"rewrite of {projection} produced a non-spherical map {result}")
    return result


def _face_for(projection: KnotProjection, darts: Sequence[int]) -> Face:
    if not darts or any(not 0 <= d < projection.dart_count for d in darts):
        raise IllegalSiteError(f"anchor {tuple(darts)} is not a set of darts of {projection}")
    index = face_index_of_darts(projection)[darts[0]]
    face = faces(projection)[index]
    if sorted(face.darts) != sorted(darts):
        raise IllegalSiteError(f"anchor {tuple(darts)} is not a face of {projection}")
    return face


def _remove_labels(projection: KnotProjection, labels: set[int]) -> KnotProjection:
    tokens = [pos for pos, label in enumerate(projection.word) if label not in labels]
    return _assemble(projection, tokens)


def _apply_down(projection: KnotProjection, site: MoveSite) -> KnotProjection:
    face = _face_for(projection, site.anchor)
    if _down_kind(face) is not site.kind:
        raise IllegalSiteError(f"face {face.darts} does not support {site.kind.value}")
    return _remove_labels(projection, set(face.corners))


def _apply_riii(projection: KnotProjection, site: MoveSite) -> KnotProjection:
    face = _face_for(projection, site.anchor)
    if _down_kind(face) is not site.kind:
        raise IllegalSiteError(f"face {face.darts} does not support {site.kind.value}")
    m = len(projection.word)
    order = list(range(m))
    # each strand of the triangle meets its two corners in the opposite order
    for arc in face.arcs:
        i, j = arc, (arc + 1) % m
        order[i], order[j] = order[j], order[i]
    return _assemble(projection, order)


def _apply_ri_up(projection: KnotProjection, site: MoveSite) -> KnotProjection:
    if len(site.anchor) != 2 or site.anchor[1] not in (-1, 1):
        raise IllegalSiteError(f"bad RI anchor {site.anchor}")
    arc, turn = site.anchor
    m = len(projection.word)
    kink = [("x", 0), ("x", 1)]
    if m == 0:
        if arc != 0:
            raise IllegalSiteError(f"O has a single arc, got {arc}")
        return _assemble(projection, kink, {"x": turn})
    if not 0 <= arc < m:
        raise IllegalSiteError(f"arc {arc} out of range for {projection}")
    tokens: list[int | tuple[str, int]] = []
    for pos in range(m):
        tokens.append(pos)
        if pos == arc:
            tokens.extend(kink)
    return _assemble(projection, tokens, {"x": turn})


def _apply_rii_up(projection: KnotProjection, site: MoveSite) -> KnotProjection:
    if len(site.anchor) != 2:
        raise IllegalSiteError(f"bad RII anchor {site.anchor}")
    d1, d2 = site.anchor

    if projection.is_trivial:
        if d1 != -1 or d2 not in (-1, 1) or site.kind is not MoveKind.SRII_UP:
            raise IllegalSiteError(f"O only admits strong RII up, got {site}")
        side = d2
        tokens = [("x", 0), ("y", 0), ("y", 1), ("x", 1)]
        return _assemble(projection, tokens, {"x": -side, "y": side})

    owner = face_index_of_darts(projection)
    if not (0 <= d1 < projection.dart_count and 0 <= d2 < projection.dart_count):
        raise IllegalSiteError(f"anchor {site.anchor} out of range")
    if owner[d1] != owner[d2] or d1 >> 1 == d2 >> 1:
        raise IllegalSiteError(f"darts {d1}, {d2} are not distinct arcs of one face")
    if _rii_up_kind(projection, d1, d2) is not site.kind:
        raise IllegalSiteError(f"darts {d1}, {d2} do not make a {site.kind.value} site")

    strong = site.kind is MoveKind.SRII_UP
    finger_arc, other_arc = d1 >> 1, d2 >> 1
    other_dir = 1 if projection.is_forward(d2) else -1
    finger = [("x", 0), ("y", 0)]
    crossed = [("y", 1), ("x", 1)] if strong else [("x", 1), ("y", 1)]
    tokens: list[int | tuple[str, int]] = []
    for pos in range(len(projection.word)):
        tokens.append(pos)
        if pos == finger_arc:
            tokens.extend(finger)
        if pos == other_arc:
            tokens.extend(crossed)
    return _assemble(projection, tokens, {"x": -other_dir, "y": other_dir})


def apply(projection: KnotProjection, site: MoveSite) -> KnotProjection:
    """
    Rewrite the projection at a legal site.

    The crossing number changes by the kind's delta: +-1 for RI, +-2 for RII, 0 for RIII.

    Raises:
        IllegalSiteError: If the site is not legal on the projection
    """
    if site.kind in (MoveKind.RI_DOWN, MoveKind.SRII_DOWN, MoveKind.WRII_DOWN):
        return _apply_down(projection, site)
    if site.kind in (MoveKind.SRIII, MoveKind.WRIII):
        return _apply_riii(projection, site)
    if site.kind is MoveKind.RI_UP:
        return _apply_ri_up(projection, site)
    return _apply_rii_up(projection, site)


def apply_sequence(projection: KnotProjection, sites: Iterable[MoveSite]) -> KnotProjection:
    for site in sites:
        projection = apply(projection, site)
    return projection


def neighbours(
    projection: KnotProjection, allowed: Iterable[MoveType] | None = None, c_max: int | None = None
) -> list[tuple[MoveSite, KnotProjection]]:
    """(site, result) for every legal site whose result stays within `c_max` crossings."""
    result = []
    for site in enumerate_moves(projection, allowed):
        if c_max is not None and projection.crossings + site.kind.delta > c_max:
            continue
        result.append((site, apply(projection, site)))
    return result


def inverse_site(
    projection: KnotProjection, site: MoveSite, result: KnotProjection | None = None
) -> MoveSite:
    """
    A site on the result of `site` that leads back to a curve isotopic to `projection`.

    Raises:
        IllegalSiteError: If no inverse exists (which would indicate a rewriting bug)
    """
    result = apply(projection, site) if result is None else result
    target = projection.key
    for candidate in enumerate_moves(result, [site.kind.move_type]):
        if candidate.kind is not site.kind.inverse:
            continue
        if apply(result, candidate).key == target:
            return candidate
    raise IllegalSiteError(f"no inverse of {site} found on {result}")


def face_sites(projection: KnotProjection, kinds: Iterable[MoveKind]) -> list[MoveSite]:
    """Down and RIII sites of the given kinds only, sorted; skips the up-site enumeration."""
    wanted = set(kinds)
    sites = []
    for face in faces(projection):
        kind = _down_kind(face)
        if kind is not None and kind in wanted:
            anchor = face.darts if kind is MoveKind.RI_DOWN else tuple(sorted(face.darts))
            sites.append(MoveSite(kind, anchor))
    sites.sort(key=MoveSite.sort_key)
    return sites
