"""
Curve core: Gauss codes, knot projections as combinatorial maps, realization on the
sphere, canonical keys and connected-sum decomposition.

A projection with n double points is stored as its Gauss word (2n positions, labels 1..n
numbered by first appearance) together with one configuration sign per double point. The
sign of a label is the orientation of the frame (first passage, second passage): +1 when
the second branch crosses the first one from right to left.

Darts: the arc from position k to position k+1 owns darts 2k (its tail) and 2k+1 (its head),
so the edge involution is d ^ 1. The vertex rotation lists the four darts of a double point
counterclockwise, and faces are the orbits of rotation-after-involution.
"""

import json
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import product
from pathlib import Path
from typing import NewType

from ..errors import GaussCodeError, NonRealizableError

CanonicalKey = NewType("CanonicalKey", str)


@dataclass(frozen=True)
class GaussCode:
    """A double-occurrence word; the empty word is the trivial projection O."""

    word: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.word) // 2

    def __str__(self) -> str:
        return " ".join(str(label) for label in self.word)


def _normalize_labels(word: Iterable[int]) -> tuple[int, ...]:
    relabel: dict[int, int] = {}
    out = []
    for label in word:
        if label not in relabel:
            relabel[label] = len(relabel) + 1
        out.append(relabel[label])
    return tuple(out)


def validate_word(word: Sequence[int]) -> tuple[int, ...]:
    """Check the double-occurrence property and renumber labels by first appearance."""
    counts: dict[int, int] = {}
    for label in word:
        counts[label] = counts.get(label, 0) + 1
    bad = sorted(label for label, count in counts.items() if count != 2)
    if bad:
        raise GaussCodeError(
            "every label must occur exactly twice; offending labels: "
            + ", ".join(f"{label} (x{counts[label]})" for label in bad)
        )
    return _normalize_labels(word)


def parse_gauss_code(text: str) -> GaussCode:
    """
    Parse whitespace-separated labels into a normalized Gauss code.

    Args:
        text: Labels such as "1 2 3 1 2 3"; anything after `#` is ignored

    Returns:
        GaussCode: Word with labels renumbered 1..n by first appearance

    Raises:
        GaussCodeError: On non-integer tokens or labels not occurring exactly twice
    """
    tokens = text.split("#", 1)[0].split()
    try:
        word = [int(token) for token in tokens]
    except ValueError as e:
        raise GaussCodeError(f"non-integer token in Gauss code {text!r}") from e
    return GaussCode(validate_word(word))


def _positions(word: Sequence[int]) -> list[tuple[int, int]]:
    """(first, second) position of every label, indexed by label - 1."""
    n = len(word) // 2
    first = [-1] * n
    pairs = [(-1, -1)] * n
    for pos, label in enumerate(word):
        i = label - 1
        if first[i] < 0:
            first[i] = pos
        else:
            pairs[i] = (first[i], pos)
    return pairs


def _rotation(word: Sequence[int], signs: Sequence[int]) -> list[int]:
    """Counterclockwise successor of every dart around its double point."""
    m = len(word)
    sigma = [0] * (2 * m)
    for (p, q), sign in zip(_positions(word), signs, strict=True):
        out_p, out_q = 2 * p, 2 * q
        in_p, in_q = 2 * ((p - 1) % m) + 1, 2 * ((q - 1) % m) + 1
        cycle = (out_p, out_q, in_p, in_q) if sign > 0 else (out_p, in_q, in_p, out_q)
        for i in range(4):
            sigma[cycle[i]] = cycle[(i + 1) % 4]
    return sigma


def _face_orbits(sigma: Sequence[int]) -> list[tuple[int, ...]]:
    seen = [False] * len(sigma)
    orbits = []
    for start in range(len(sigma)):
        if seen[start]:
            continue
        orbit = []
        dart = start
        while not seen[dart]:
            seen[dart] = True
            orbit.append(dart)
            dart = sigma[dart ^ 1]
        orbits.append(tuple(orbit))
    return orbits


def _is_spherical(word: Sequence[int], signs: Sequence[int]) -> bool:
    if not word:
        return True
    return len(_face_orbits(_rotation(word, signs))) == len(word) // 2 + 2


def _relabel(
    word: Sequence[int],
    signs: Sequence[int],
    first_pos: Sequence[int],
    order: Sequence[int],
    flip: bool = False,
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """
    Re-read the curve along `order` (a sequence of old positions) and renumber.

    A label keeps its sign when the passage read first is still its old first passage and
    changes sign otherwise; `flip` mirrors every sign.
    """
    relabel: dict[int, int] = {}
    new_word = []
    new_signs = []
    for pos in order:
        label = word[pos]
        if label not in relabel:
            relabel[label] = len(relabel) + 1
            sign = signs[label - 1]
            if pos != first_pos[label - 1]:
                sign = -sign
            new_signs.append(-sign if flip else sign)
        new_word.append(relabel[label])
    return tuple(new_word), tuple(new_signs)


@dataclass(frozen=True)
class KnotProjection:
    """
    A knot projection on the 2-sphere: Gauss word plus one configuration sign per double
    point. Instances are immutable; derived structure is computed on first use.
    """

    word: tuple[int, ...] = ()
    signs: tuple[int, ...] = ()

    def __post_init__(self):
        if len(self.word) != 2 * len(self.signs):
            raise GaussCodeError(
                f"word of length {len(self.word)} needs {len(self.word) // 2} signs, "
                f"got {len(self.signs)}"
            )
        if _normalize_labels(self.word) != self.word:
            raise GaussCodeError(f"labels of {list(self.word)} are not normalized")
        if any(sign not in (-1, 1) for sign in self.signs):
            raise GaussCodeError(f"configuration signs must be +1 or -1, got {self.signs}")

    @property
    def crossings(self) -> int:
        """c(P), the number of double points."""
        return len(self.signs)

    @property
    def is_trivial(self) -> bool:
        return not self.word

    @property
    def gauss_code(self) -> GaussCode:
        return GaussCode(self.word)

    @cached_property
    def positions(self) -> tuple[tuple[int, int], ...]:
        return tuple(_positions(self.word))

    @cached_property
    def first_positions(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.positions)

    @cached_property
    def rotation(self) -> tuple[int, ...]:
        return tuple(_rotation(self.word, self.signs))

    @cached_property
    def face_orbits(self) -> tuple[tuple[int, ...], ...]:
        return tuple(_face_orbits(self.rotation))

    @property
    def dart_count(self) -> int:
        return 2 * len(self.word)

    def arc_of(self, dart: int) -> int:
        return dart >> 1

    def is_forward(self, dart: int) -> bool:
        """True when the dart runs along its arc in the direction of the curve."""
        return dart & 1 == 0

    def vertex_of(self, dart: int) -> int:
        """Label of the double point the dart is attached to."""
        arc = dart >> 1
        pos = arc if dart & 1 == 0 else (arc + 1) % len(self.word)
        return self.word[pos]

    def euler_ok(self) -> bool:
        """V - E + F = 2 with E = 2V; O is the circle splitting the sphere in two."""
        if self.is_trivial:
            return True
        return len(self.face_orbits) == self.crossings + 2

    @cached_property
    def key(self) -> CanonicalKey:
        return canonical_key(self)

    def to_json(self) -> dict:
        return {"code": list(self.word), "config": list(self.signs)}

    @classmethod
    def from_json(cls, data: dict | str) -> "KnotProjection":
        if isinstance(data, str):
            data = json.loads(data)
        word = validate_word(data.get("code", []))
        projection = cls(word, tuple(int(sign) for sign in data.get("config", [])))
        if not projection.euler_ok():
            raise NonRealizableError(word)
        return projection

    def __str__(self) -> str:
        if self.is_trivial:
            return "O"
        marks = "".join("+" if sign > 0 else "-" for sign in self.signs)
        return f"{' '.join(map(str, self.word))} [{marks}]"


TRIVIAL = KnotProjection()


def interlacement_parity_ok(word: Sequence[int]) -> bool:
    """Every label of a planar word is interlaced with an even number of labels."""
    for p, q in _positions(word):
        inside: dict[int, int] = {}
        for label in word[p + 1 : q]:
            inside[label] = inside.get(label, 0) + 1
        if sum(1 for count in inside.values() if count == 1) % 2:
            return False
    return True


def realizations(code: GaussCode | Sequence[int]) -> list[KnotProjection]:
    """Every spherical configuration of the word, in lexicographic order of signs."""
    word = validate_word(code.word if isinstance(code, GaussCode) else code)
    if not word:
        return [TRIVIAL]
    if not interlacement_parity_ok(word):
        return []
    n = len(word) // 2
    return [
        KnotProjection(word, signs)
        for signs in product((-1, 1), repeat=n)
        if _is_spherical(word, signs)
    ]


def realize(code: GaussCode | Sequence[int]) -> KnotProjection:
    """
    Embed a Gauss code in the sphere.

    Backtracks over the two local configurations of every double point and keeps the
    lexicographically first one passing the Euler check F = V + 2.
    A composite word has several spherical configurations (one per placement of its
    summands), so for composites this need not be the curve the word was read from.

    Raises:
        NonRealizableError: If no configuration gives a genus-zero map
    """
    word = validate_word(code.word if isinstance(code, GaussCode) else code)
    if not word:
        return TRIVIAL
    if interlacement_parity_ok(word):
        n = len(word) // 2
        for signs in product((-1, 1), repeat=n):
            if _is_spherical(word, signs):
                return KnotProjection(word, signs)
    raise NonRealizableError(word)


def mirror(projection: KnotProjection) -> KnotProjection:
    """Image under a reflection of the sphere."""
    return KnotProjection(projection.word, tuple(-sign for sign in projection.signs))


def reread(projection: KnotProjection, start: int, reverse: bool = False) -> KnotProjection:
    """The same curve read from another position and/or in the opposite direction."""
    m = len(projection.word)
    if m == 0:
        return projection
    step = -1 if reverse else 1
    order = [(start + step * k) % m for k in range(m)]
    word, signs = _relabel(projection.word, projection.signs, projection.first_positions, order)
    return KnotProjection(word, signs)


def canonical_form(projection: KnotProjection, allow_reflection: bool = False) -> KnotProjection:
    """Least (word, signs) over all starts and directions, optionally over reflections."""
    word, signs = projection.word, projection.signs
    m = len(word)
    if m == 0:
        return TRIVIAL
    first_pos = projection.first_positions
    best = None
    flips = (False, True) if allow_reflection else (False,)
    for start in range(m):
        for order in (
            [(start + k) % m for k in range(m)],
            [(start - k) % m for k in range(m)],
        ):
            for flip in flips:
                candidate = _relabel(word, signs, first_pos, order, flip)
                if best is None or candidate < best:
                    best = candidate
    return KnotProjection(*best)


def _encode_key(word: Sequence[int], signs: Sequence[int]) -> CanonicalKey:
    marks = "".join("+" if sign > 0 else "-" for sign in signs)
    return CanonicalKey(f"{'.'.join(map(str, word))}|{marks}")


def canonical_key(projection: KnotProjection, allow_reflection: bool = False) -> CanonicalKey:
    """
    Isotopy invariant key of a projection.

    Two projections share a key iff they are sphere isotopic (or related by a reflection,
    when `allow_reflection` is set).
    """
    form = canonical_form(projection, allow_reflection)
    return _encode_key(form.word, form.signs)


def projection_from_key(key: CanonicalKey | str) -> KnotProjection:
    """Inverse of `canonical_key` on canonical representatives."""
    word_text, _, marks = key.partition("|")
    word = tuple(int(label) for label in word_text.split(".")) if word_text else ()
    return KnotProjection(word, tuple(1 if mark == "+" else -1 for mark in marks))


def sub_projection(projection: KnotProjection, order: Sequence[int]) -> KnotProjection:
    """Projection read along a subset of positions closed under label pairing."""
    word, signs = _relabel(projection.word, projection.signs, projection.first_positions, order)
    return KnotProjection(word, signs)


def connected_sum(first: KnotProjection, second: KnotProjection) -> KnotProjection:
    """Join two projections by cutting both along their closing arc."""
    shift = first.crossings
    return KnotProjection(
        first.word + tuple(label + shift for label in second.word),
        first.signs + second.signs,
    )


def _minimal_block(word: Sequence[int]) -> tuple[int, int] | None:
    """Shortest cyclic segment (start, length) that is a union of label pairs."""
    m = len(word)
    for length in range(2, m - 1, 2):
        for start in range(m):
            counts: dict[int, int] = {}
            for k in range(length):
                label = word[(start + k) % m]
                counts[label] = counts.get(label, 0) + 1
            if all(count == 2 for count in counts.values()):
                return start, length
    return None


@dataclass(frozen=True)
class SumDecomposition:
    """
    Prime summands together with the gluing record: `positions[i]` lists the positions of
    the original word that `summands[i]` was read along, so it names the arc each summand
    was cut from and, through the configuration signs, the side it sits on.
    """

    summands: tuple[KnotProjection, ...]
    positions: tuple[tuple[int, ...], ...]

    def reassemble(self) -> KnotProjection:
        return reassemble(self)


def decompose_with_gluing(projection: KnotProjection) -> SumDecomposition:
    """
    Split a projection into prime summands, keeping where each one was glued.

    A split is a cyclic segment of the word whose labels are closed under pairing; the
    shortest such segment is prime, and the rest of the word is decomposed in turn.
    """
    if projection.is_trivial:
        return SumDecomposition((), ())
    summands = []
    positions = []
    current = list(range(len(projection.word)))
    while True:
        block = _minimal_block([projection.word[pos] for pos in current])
        if block is None:
            summands.append(sub_projection(projection, current))
            positions.append(tuple(current))
            break
        start, length = block
        m = len(current)
        inside = [current[(start + k) % m] for k in range(length)]
        current = [current[(start + length + k) % m] for k in range(m - length)]
        summands.append(sub_projection(projection, inside))
        positions.append(tuple(inside))
    return SumDecomposition(tuple(summands), tuple(positions))


def reassemble(decomposition: SumDecomposition) -> KnotProjection:
    """Glue the summands back at their recorded positions; the inverse of the split."""
    if not decomposition.summands:
        return TRIVIAL
    m = sum(len(order) for order in decomposition.positions)
    word = [0] * m
    passages: dict[int, list[int]] = {}
    summand_first: dict[int, int] = {}
    summand_sign: dict[int, int] = {}
    offset = 0
    for summand, order in zip(decomposition.summands, decomposition.positions, strict=True):
        for index, pos in enumerate(order):
            label = summand.word[index] + offset
            word[pos] = label
            passages.setdefault(label, []).append(pos)
            if label not in summand_first:
                summand_first[label] = pos
                summand_sign[label] = summand.signs[summand.word[index] - 1]
        offset += summand.crossings
    first_pos = [min(passages[label]) for label in range(1, offset + 1)]
    signs = []
    for label in range(1, offset + 1):
        sign = summand_sign[label]
        signs.append(sign if summand_first[label] == first_pos[label - 1] else -sign)
    return KnotProjection(*_relabel(word, signs, first_pos, range(m)))


def connected_sum_decompose(projection: KnotProjection) -> list[KnotProjection]:
    """
    Prime summands of a projection (O has none), smallest first.

    `connected_sum` always glues at the closing arcs, so re-summing the bare list gives one
    particular composite; `decompose_with_gluing(P).reassemble()` gives P back.
    """
    summands = decompose_with_gluing(projection).summands
    return sorted(summands, key=lambda summand: (summand.crossings, summand.key))


@lru_cache(maxsize=1)
def _strong13_keys() -> frozenset[str]:
    infinity = KnotProjection((1, 1), (-1,))
    trefoil = realize((1, 2, 3, 1, 2, 3))
    return frozenset(canonical_key(curve, allow_reflection=True) for curve in (infinity, trefoil))


def in_strong13_family(projection: KnotProjection) -> bool:
    """True iff every prime summand is the curve shaped like infinity or the trefoil curve."""
    allowed = _strong13_keys()
    return all(
        canonical_key(summand, allow_reflection=True) in allowed
        for summand in connected_sum_decompose(projection)
    )


def read_gauss_file(path: str | Path) -> list[KnotProjection]:
    """
    Read one curve per line; `#` starts a comment, blank lines are skipped, a line holding
    only `O` (or nothing but a comment marker after it) is the trivial projection.

    Raises:
        FileNotFoundError: If the file does not exist
    """
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"The curve file '{path}' does not exist.")
    curves = []
    with open(path, encoding="utf-8") as file:
        for raw in file:
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if line.startswith("{"):
                curves.append(KnotProjection.from_json(line))
            elif line.upper() == "O":
                curves.append(TRIVIAL)
            else:
                curves.append(realize(parse_gauss_code(line)))
    return curves
