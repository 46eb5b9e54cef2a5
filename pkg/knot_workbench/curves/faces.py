"""
Faces of a projection, their coherence, and the state-sum invariants built on them:
Coh^odd, C, the Seifert arrangement S(P) and the non-Seifert arrangement tau(P).
"""

from dataclasses import dataclass
from enum import Enum
from functools import cached_property

import networkx as nx
from networkx.utils import UnionFind

from .curve_core import KnotProjection


class Coherence(str, Enum):
    COHERENT = "coherent"
    INCOHERENT = "incoherent"


@dataclass(frozen=True)
class Face:
    """One complementary region of the curve, traced as a cycle of darts."""

    index: int
    darts: tuple[int, ...]
    corners: tuple[int, ...]
    arcs: tuple[int, ...]
    coherence: Coherence

    @property
    def degree(self) -> int:
        return len(self.darts)

    @property
    def is_coherent(self) -> bool:
        return self.coherence is Coherence.COHERENT

    @property
    def has_distinct_corners(self) -> bool:
        return len(set(self.corners)) == len(self.corners)

    @property
    def has_distinct_arcs(self) -> bool:
        return len(set(self.arcs)) == len(self.arcs)

    @property
    def is_simple(self) -> bool:
        return self.has_distinct_corners and self.has_distinct_arcs

    def to_dict(self) -> dict:
        return {
            "degree": self.degree,
            "corners": list(self.corners),
            "arcs": list(self.arcs),
            "coherence": self.coherence.value,
        }


def _coherence(projection: KnotProjection, darts: tuple[int, ...]) -> Coherence:
    directions = {projection.is_forward(dart) for dart in darts}
    return Coherence.COHERENT if len(directions) <= 1 else Coherence.INCOHERENT


def faces(projection: KnotProjection) -> list[Face]:
    """
    All faces with degree, corners and coherence.

    A face is coherent iff every boundary dart runs the same way along the curve; a 1-gon
    is therefore coherent, and the two faces of O (degree 0) count as coherent.
    """
    if projection.is_trivial:
        return [Face(i, (), (), (), Coherence.COHERENT) for i in range(2)]
    result = []
    for index, darts in enumerate(projection.face_orbits):
        result.append(
            Face(
                index=index,
                darts=darts,
                corners=tuple(projection.vertex_of(dart) for dart in darts),
                arcs=tuple(projection.arc_of(dart) for dart in darts),
                coherence=_coherence(projection, darts),
            )
        )
    return result


def face_index_of_darts(projection: KnotProjection) -> list[int]:
    """Face index owning every dart."""
    owner = [0] * projection.dart_count
    for index, darts in enumerate(projection.face_orbits):
        for dart in darts:
            owner[dart] = index
    return owner


def coh_odd(projection: KnotProjection) -> int:
    """1 iff some coherent (2m+1)-gon exists."""
    return int(any(face.is_coherent and face.degree % 2 == 1 for face in faces(projection)))


def crossing_count(projection: KnotProjection) -> int:
    """c(P)."""
    return projection.crossings


def big_c(projection: KnotProjection) -> int:
    """C(P): 0 for the trivial projection, 1 otherwise."""
    return int(projection.crossings != 0)


@dataclass(frozen=True)
class CircleArrangement:
    """
    Disjoint circles on the sphere. Nesting is kept as the unrooted tree whose nodes are
    the complementary regions and whose edges are the circles, so it has count + 1 nodes.
    """

    count: int
    tree: nx.Graph

    @cached_property
    def canonical_tree(self) -> tuple:
        return min(
            nx.to_nested_tuple(self.tree, center, canonical_form=True)
            for center in nx.center(self.tree)
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CircleArrangement):
            return NotImplemented
        return self.count == other.count and self.canonical_tree == other.canonical_tree

    def __hash__(self) -> int:
        return hash((self.count, self.canonical_tree))

    def to_dict(self) -> dict:
        return {"count": self.count, "tree": repr(self.canonical_tree)}


def _smoothing_pairs(p_in, p_out, q_in, q_out, oriented: bool):
    if oriented:
        return {frozenset((p_in, q_out)), frozenset((q_in, p_out))}
    return {frozenset((p_in, q_in)), frozenset((p_out, q_out))}


def _arrangement(projection: KnotProjection, oriented: bool) -> CircleArrangement:
    if projection.is_trivial:
        tree = nx.Graph()
        tree.add_edge(0, 1)
        return CircleArrangement(1, tree)

    m = len(projection.word)
    arcs = UnionFind(range(m))
    regions = UnionFind(range(len(projection.face_orbits)))
    owner = face_index_of_darts(projection)
    rotation = projection.rotation

    for p, q in projection.positions:
        if oriented:
            arcs.union((p - 1) % m, q)
            arcs.union((q - 1) % m, p)
        else:
            arcs.union((p - 1) % m, (q - 1) % m)
            arcs.union(p, q)
        out_p, out_q = 2 * p, 2 * q
        in_p, in_q = 2 * ((p - 1) % m) + 1, 2 * ((q - 1) % m) + 1
        pairs = _smoothing_pairs(in_p, out_p, in_q, out_q, oriented)
        # the two corners not cut off by a smoothing arc become one region
        merged = []
        dart = out_p
        for _ in range(4):
            successor = rotation[dart]
            if frozenset((dart, successor)) not in pairs:
                merged.append(owner[successor])
            dart = successor
        regions.union(merged[0], merged[1])

    tree = nx.Graph()
    tree.add_nodes_from({regions[face] for face in range(len(projection.face_orbits))})
    seen_circles = set()
    for arc in range(m):
        circle = arcs[arc]
        if circle in seen_circles:
            continue
        seen_circles.add(circle)
        tree.add_edge(regions[owner[2 * arc]], regions[owner[2 * arc + 1]])
    return CircleArrangement(len(seen_circles), tree)


def seifert_state(projection: KnotProjection) -> CircleArrangement:
    """S(P): smooth every double point along the curve orientation."""
    return _arrangement(projection, oriented=True)


def tau_state(projection: KnotProjection) -> CircleArrangement:
    """tau(P): smooth every double point against the curve orientation."""
    return _arrangement(projection, oriented=False)


def seifert_number(projection: KnotProjection) -> int:
    """s(P)."""
    return seifert_state(projection).count


def circle_number(projection: KnotProjection) -> int:
    """|tau(P)|."""
    return tau_state(projection).count


def invariant_summary(projection: KnotProjection) -> dict:
    """c, C, Coh^odd, s, |tau| and the face table, as printed by `kp inv`."""
    return {
        "code": list(projection.word),
        "config": list(projection.signs),
        "c": projection.crossings,
        "C": big_c(projection),
        "coh_odd": coh_odd(projection),
        "s": seifert_number(projection),
        "tau": circle_number(projection),
        "faces": [face.to_dict() for face in faces(projection)],
    }
