"""
Knot layer: knot diagrams over a projection, the Kauffman bracket and Jones polynomial,
the trivializing number, the canonical genus and W = tr - 2g.

Over/under data is one bit per double point: bit i set means the first passage through
label i + 1 goes over. With the configuration sign eps of that label, the crossing sign is
eps when the first passage is over and -eps otherwise.

Bracket states are indexed by the smoothing taken at each double point (bit set: the
smoothing along the curve orientation). Their loop counts depend on the projection alone,
so one table serves every diagram over it. At a positive crossing the A-smoothing is the
oriented one.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product

import numpy as np
from networkx.utils import UnionFind

from ..config import KnotBudget, load_budget_config
from ..curves.curve_core import KnotProjection
from ..curves.faces import seifert_number
from ..errors import BudgetExceededError, KnotWorkbenchError
from ..util.logger_config import logger
from .laurent import LaurentPoly


@lru_cache(maxsize=1)
def _default_budget() -> KnotBudget:
    return load_budget_config().knot


@dataclass(frozen=True)
class KnotDiagram:
    """A projection with over/under information at every double point."""

    projection: KnotProjection
    over: tuple[int, ...]

    def __post_init__(self):
        if len(self.over) != self.projection.crossings:
            raise KnotWorkbenchError(
                f"{self.projection.crossings} over/under bits needed, got {len(self.over)}"
            )

    @classmethod
    def from_mask(cls, projection: KnotProjection, mask: int) -> "KnotDiagram":
        return cls(projection, tuple((mask >> i) & 1 for i in range(projection.crossings)))

    @property
    def mask(self) -> int:
        return sum(bit << i for i, bit in enumerate(self.over))

    @property
    def crossing_signs(self) -> tuple[int, ...]:
        return tuple(
            sign if bit else -sign
            for sign, bit in zip(self.projection.signs, self.over, strict=True)
        )

    @property
    def writhe(self) -> int:
        return sum(self.crossing_signs)

    def forget(self) -> KnotProjection:
        return self.projection

    def to_json(self) -> dict:
        return {**self.projection.to_json(), "over": list(self.over)}


def lift_K(projection: KnotProjection) -> KnotDiagram:
    """
    Positive lift: at every double point the branch whose direction, followed by the other
    branch's direction, forms a positive frame goes over. Every crossing becomes positive.
    """
    return KnotDiagram(projection, tuple(1 if sign > 0 else 0 for sign in projection.signs))


def _count_loops(m: int, joins: list[tuple[int, int]]) -> int:
    loops = UnionFind(range(m))
    for a, b in joins:
        loops.union(a, b)
    return sum(1 for _ in loops.to_sets())


@lru_cache(maxsize=4096)
def state_loops(projection: KnotProjection) -> np.ndarray:
    """Number of loops of every smoothing state, indexed by the oriented-smoothing mask."""
    n = projection.crossings
    if n == 0:
        return np.ones(1, dtype=np.int64)
    m = len(projection.word)
    oriented = []
    unoriented = []
    for p, q in projection.positions:
        oriented.append((((p - 1) % m, q), ((q - 1) % m, p)))
        unoriented.append((((p - 1) % m, (q - 1) % m), (p, q)))
    loops = np.empty(1 << n, dtype=np.int64)
    for mask in range(1 << n):
        joins = []
        for i in range(n):
            joins.extend(oriented[i] if (mask >> i) & 1 else unoriented[i])
        loops[mask] = _count_loops(m, joins)
    loops.setflags(write=False)
    return loops


@lru_cache(maxsize=32)
def _popcounts(n: int) -> np.ndarray:
    counts = np.array([bin(mask).count("1") for mask in range(1 << n)], dtype=np.int64)
    counts.setflags(write=False)
    return counts


@lru_cache(maxsize=64)
def _delta_power(k: int) -> LaurentPoly:
    """(-A^2 - A^-2)^k."""
    return LaurentPoly(-2, [-1, 0, 0, 0, -1]) ** k


def _check_budget(projection: KnotProjection, limit: int, what: str) -> None:
    if projection.crossings > limit:
        raise BudgetExceededError(
            f"{what} needs c(P) <= {limit}, got {projection.crossings} for {projection}"
        )


def kauffman_bracket(diagram: KnotDiagram) -> LaurentPoly:
    """<D> in the variable A, normalized so that the one-loop state contributes 1."""
    n = diagram.projection.crossings
    loops = state_loops(diagram.projection)
    positive = sum(1 << i for i, sign in enumerate(diagram.crossing_signs) if sign > 0)
    masks = np.arange(1 << n, dtype=np.int64)
    a_count = n - _popcounts(n)[masks ^ positive]
    exponents = 2 * a_count - n
    pairs, counts = np.unique(np.stack([exponents, loops]), axis=1, return_counts=True)
    bracket = LaurentPoly()
    for (exponent, loop_count), count in zip(pairs.T.tolist(), counts.tolist(), strict=True):
        bracket = bracket + _delta_power(loop_count - 1).shift(exponent) * count
    return bracket


def jones(diagram: KnotDiagram, max_crossings: int | None = None) -> LaurentPoly:
    """
    Jones polynomial in t = A^-4 from the bracket and writhe: V = (-A^3)^(-w) <D>.

    Raises:
        BudgetExceededError: If the diagram has more crossings than the state-sum budget
    """
    limit = _default_budget().jones_max_crossings if max_crossings is None else max_crossings
    _check_budget(diagram.projection, limit, "jones")
    w = diagram.writhe
    in_a = kauffman_bracket(diagram).shift(-3 * w) * (-1 if w % 2 else 1)
    return in_a.invert_variable().rescale(4)


def is_unknot(diagram: KnotDiagram) -> bool:
    """Unknot test by the Jones polynomial; a proxy that is exact at the sizes used here."""
    return jones(diagram) == LaurentPoly.one()


def jones_table(projection: KnotProjection) -> dict[int, LaurentPoly]:
    """Jones polynomial of every diagram over the projection, keyed by over mask."""
    return {
        mask: jones(KnotDiagram.from_mask(projection, mask))
        for mask in range(1 << projection.crossings)
    }


def trivializing_number(projection: KnotProjection, max_crossings: int | None = None) -> int:
    """
    tr(P): least k such that fixing over/under at some k double points makes every
    completion an unknot. Exhaustive over subsets and assignments.

    Raises:
        BudgetExceededError: Above the brute-force budget
    """
    limit = _default_budget().tr_max_crossings if max_crossings is None else max_crossings
    _check_budget(projection, limit, "trivializing_number")
    n = projection.crossings
    one = LaurentPoly.one()
    unknot = np.array(
        [poly == one for _, poly in sorted(jones_table(projection).items())], dtype=bool
    )
    masks = np.arange(1 << n, dtype=np.int64)
    for k in range(n + 1):
        for subset in combinations(range(n), k):
            fixed = sum(1 << i for i in subset)
            for values in product((0, 1), repeat=k):
                value = sum(bit << i for bit, i in zip(values, subset, strict=True))
                if unknot[(masks & fixed) == value].all():
                    logger.debug(f"tr({projection}) = {k}, fixed {subset} -> {values}")
                    return k
    raise KnotWorkbenchError(f"no trivializing assignment found for {projection}")


def canonical_genus(projection: KnotProjection) -> int:
    """g(P) = (c - s + 1) / 2 from Seifert's algorithm."""
    twice = projection.crossings - seifert_number(projection) + 1
    if twice % 2:
        raise KnotWorkbenchError(
            f"c - s + 1 = {twice} is odd for {projection}; Seifert smoothing is inconsistent"
        )
    return twice // 2


def w_invariant(projection: KnotProjection) -> int:
    """W(P) = tr(P) - 2 g(P)."""
    return trivializing_number(projection) - 2 * canonical_genus(projection)


def knot_summary(projection: KnotProjection) -> dict:
    """Jones of the positive lift, tr, g and W as printed by `kp knot`; None past budget."""
    summary: dict = {"code": list(projection.word), "config": list(projection.signs)}
    try:
        polynomial = jones(lift_K(projection))
        summary["jones"] = polynomial.format()
        summary["jones_terms"] = polynomial.to_dict()
    except BudgetExceededError as e:
        logger.warning(str(e))
        summary["jones"] = None
        summary["jones_terms"] = None
    summary["g"] = canonical_genus(projection)
    try:
        summary["tr"] = trivializing_number(projection)
        summary["W"] = summary["tr"] - 2 * summary["g"]
    except BudgetExceededError as e:
        logger.warning(str(e))
        summary["tr"] = None
        summary["W"] = None
    return summary
