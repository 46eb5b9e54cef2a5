"""
Witness-producing search over sphere-isotopy classes of projections.

Nodes are canonical keys; every move is applied to the canonical representative of its
node, so a witness is a list of sites that replays from the start key alone. A failed search
is inconclusive: inequality claims come from invariants, never from here.
"""

import heapq
import time
from collections.abc import Callable, Iterable
from dataclasses import dataclass, field

from ..config import SearchBudget
from ..curves.curve_core import (
    CanonicalKey,
    KnotProjection,
    canonical_form,
    canonical_key,
    projection_from_key,
)
from ..errors import IllegalSiteError
from ..moves.moves import (
    AppliedMove,
    MoveKind,
    MoveSet,
    MoveSite,
    MoveType,
    apply,
    enumerate_moves,
)
from ..util.logger_config import logger


@dataclass(frozen=True)
class Witness:
    """A replayable move sequence from `start` to `end` using only moves of `move_set`."""

    start: CanonicalKey
    end: CanonicalKey
    moves: tuple[AppliedMove, ...]
    move_set: MoveSet
    allow_reflection: bool = False

    @property
    def length(self) -> int:
        return len(self.moves)

    @property
    def found(self) -> bool:
        return True

    def to_dict(self) -> dict:
        return {
            "start": self.start,
            "end": self.end,
            "move_set": [t.value for t in self.move_set],
            "allow_reflection": self.allow_reflection,
            "moves": [move.to_dict() for move in self.moves],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Witness":
        return cls(
            start=CanonicalKey(data["start"]),
            end=CanonicalKey(data["end"]),
            moves=tuple(AppliedMove.from_dict(move) for move in data["moves"]),
            move_set=MoveSet.of(*data["move_set"]),
            allow_reflection=bool(data.get("allow_reflection", False)),
        )


@dataclass(frozen=True)
class NotFound:
    """Inconclusive search outcome with the statistics of the attempt."""

    reason: str
    stats: dict = field(default_factory=dict)

    @property
    def found(self) -> bool:
        return False

    def to_dict(self) -> dict:
        return {"found": False, "reason": self.reason, "stats": dict(self.stats)}


SearchResult = Witness | NotFound


def _key(projection: KnotProjection, allow_reflection: bool) -> CanonicalKey:
    return canonical_key(projection, allow_reflection)


def _representative(key: CanonicalKey) -> KnotProjection:
    return projection_from_key(key)


def _has_enumerated_inverse(projection: KnotProjection, site: MoveSite) -> bool:
    """
    False for the RII removals whose undoing would push an arc across itself; those up
    moves are not enumerated, so a backward search must not step over them.
    """
    if site.kind not in (MoveKind.SRII_DOWN, MoveKind.WRII_DOWN):
        return True
    m = len(projection.word)
    if m == 4:
        return site.kind is MoveKind.SRII_DOWN
    a, b = (dart >> 1 for dart in site.anchor)
    return (a - b) % m not in (2, m - 2)


def _expand(
    key: CanonicalKey,
    moves: MoveSet,
    c_max: int,
    allow_reflection: bool,
    invertible_only: bool = False,
) -> list[tuple[MoveSite, CanonicalKey, int]]:
    """(site, neighbour key, neighbour crossings) for every legal move within the cap."""
    projection = _representative(key)
    result = []
    for site in enumerate_moves(projection, moves):
        if projection.crossings + site.kind.delta > c_max:
            continue
        if invertible_only and not _has_enumerated_inverse(projection, site):
            continue
        following = apply(projection, site)
        result.append((site, _key(following, allow_reflection), following.crossings))
    return result


def connecting_site(
    source: CanonicalKey,
    target: CanonicalKey,
    move_type: MoveType,
    allow_reflection: bool = False,
) -> MoveSite:
    """
    A site of the given type on the representative of `source` leading to `target`.

    Raises:
        IllegalSiteError: If no single move of that type connects the two curves
    """
    projection = _representative(source)
    for site in enumerate_moves(projection, [move_type]):
        if _key(apply(projection, site), allow_reflection) == target:
            return site
    raise IllegalSiteError(f"no {move_type.value} move leads from {source} to {target}")


def _stats(started: float, visited: int, expanded: int, c_max: int, **extra) -> dict:
    return {
        "visited": visited,
        "expanded": expanded,
        "elapsed": round(time.monotonic() - started, 3),
        "c_max": c_max,
        **extra,
    }


def equiv_witness(
    first: KnotProjection,
    second: KnotProjection,
    moves: MoveSet,
    budget: SearchBudget | None = None,
    allow_reflection: bool = False,
) -> SearchResult:
    """
    Bidirectional search for a move sequence from `first` to `second`.

    Both sides grow over canonical keys; each side expands its open nodes in order of
    (crossings, depth), so descending paths are tried before detours through larger curves.
    The search stops when the sides meet, when a side is exhausted below the crossing cap,
    or when the node or time cap is hit.

    Returns:
        Witness on success, NotFound (inconclusive) otherwise
    """
    budget = budget or SearchBudget()
    c_max = budget.crossing_cap(first.crossings, second.crossings)
    start = _key(first, allow_reflection)
    goal = _key(second, allow_reflection)
    started = time.monotonic()
    if start == goal:
        return Witness(start, goal, (), moves, allow_reflection)

    # parents: key -> (neighbour key toward the side's root, site or type linking them)
    parents: tuple[dict, dict] = ({start: None}, {goal: None})
    heaps: tuple[list, list] = (
        [(first.crossings, 0, 0, start)],
        [(second.crossings, 0, 1, goal)],
    )
    counter = 2
    expanded = 0
    meeting: CanonicalKey | None = None

    while meeting is None:
        if not heaps[0] or not heaps[1]:
            logger.info(f"equiv_witness: class exhausted below c_max={c_max}")
            return NotFound(
                "exhausted",
                _stats(
                    started, len(parents[0]) + len(parents[1]), expanded, c_max, exhausted=True
                ),
            )
        if len(parents[0]) + len(parents[1]) > budget.node_cap:
            logger.warning(f"equiv_witness: node cap {budget.node_cap} reached")
            return NotFound(
                "node_cap", _stats(started, len(parents[0]) + len(parents[1]), expanded, c_max)
            )
        if budget.time_cap and time.monotonic() - started > budget.time_cap:
            logger.warning(f"equiv_witness: time cap {budget.time_cap}s reached")
            return NotFound(
                "time_cap", _stats(started, len(parents[0]) + len(parents[1]), expanded, c_max)
            )

        side = 0 if len(heaps[0]) <= len(heaps[1]) else 1
        _, depth, _, key = heapq.heappop(heaps[side])
        expanded += 1
        for site, neighbour, crossings in _expand(
            key, moves, c_max, allow_reflection, invertible_only=side == 1
        ):
            if neighbour in parents[side]:
                continue
            parents[side][neighbour] = (key, site if side == 0 else site.kind.move_type)
            if neighbour in parents[1 - side]:
                meeting = neighbour
                break
            heapq.heappush(heaps[side], (crossings, depth + 1, counter, neighbour))
            counter += 1

    applied = _forward_path(parents[0], meeting) + _backward_path(
        parents[1], meeting, allow_reflection
    )
    witness = Witness(start, goal, tuple(applied), moves, allow_reflection)
    logger.info(
        f"equiv_witness: {witness.length} moves under {moves.label} "
        f"({expanded} expansions, {time.monotonic() - started:.2f}s)"
    )
    return witness


def _forward_path(parents: dict, meeting: CanonicalKey) -> list[AppliedMove]:
    path = []
    key = meeting
    while parents[key] is not None:
        previous, site = parents[key]
        path.append(AppliedMove(site, previous, key))
        key = previous
    path.reverse()
    return path


def _backward_path(
    parents: dict, meeting: CanonicalKey, allow_reflection: bool
) -> list[AppliedMove]:
    path = []
    key = meeting
    while parents[key] is not None:
        following, move_type = parents[key]
        site = connecting_site(key, following, move_type, allow_reflection)
        path.append(AppliedMove(site, key, following))
        key = following
    return path


def verify_witness(witness: Witness) -> bool:
    """
    Replay a witness from its start key: every site must be legal on the current curve and
    belong to the declared move set, and the keys must chain up to `end`.
    """
    current = witness.start
    for index, move in enumerate(witness.moves):
        if move.before != current:
            logger.warning(f"witness step {index}: expected {current}, record says {move.before}")
            return False
        if move.kind not in witness.move_set:
            logger.warning(f"witness step {index}: {move.kind.value} not in {witness.move_set}")
            return False
        try:
            following = apply(_representative(current), move.site)
        except IllegalSiteError as e:
            logger.warning(f"witness step {index}: {e}")
            return False
        current = _key(following, witness.allow_reflection)
        if current != move.after:
            logger.warning(f"witness step {index}: reached {current}, record says {move.after}")
            return False
    if current != witness.end:
        logger.warning(f"witness ends at {current}, expected {witness.end}")
        return False
    return True


def replay(witness: Witness) -> KnotProjection:
    """Curve reached by applying every move of the witness to its start representative."""
    projection = _representative(witness.start)
    for move in witness.moves:
        projection = canonical_form(apply(projection, move.site), witness.allow_reflection)
    return projection


def _require_fixed_c(moves: Iterable[MoveType]) -> None:
    extra = set(moves) - {MoveType.SRIII, MoveType.WRIII}
    if extra:
        raise ValueError(
            "reachable_fixed_c needs RIII moves only, got "
            + ", ".join(t.value for t in sorted(extra, key=lambda t: t.value))
        )


def reachable_fixed_c(
    projection: KnotProjection, moves: MoveSet, allow_reflection: bool = False
) -> frozenset[CanonicalKey]:
    """
    The whole class of `projection` under RIII-only moves. The crossing number is constant,
    so the state space is finite and the closure is exact.

    Raises:
        ValueError: If the move set contains RI or RII
    """
    _require_fixed_c(moves)
    c = projection.crossings
    start = _key(projection, allow_reflection)
    seen = {start}
    stack = [start]
    while stack:
        key = stack.pop()
        for _, neighbour, _ in _expand(key, moves, c, allow_reflection):
            if neighbour not in seen:
                seen.add(neighbour)
                stack.append(neighbour)
    logger.debug(f"reachable_fixed_c: {len(seen)} curves under {moves.label}")
    return frozenset(seen)


def find_in_class(
    projection: KnotProjection,
    moves: MoveSet,
    predicate: Callable[[KnotProjection], bool],
    budget: SearchBudget | None = None,
    allow_reflection: bool = False,
) -> SearchResult:
    """
    Search the class of `projection` for a curve satisfying `predicate`; nodes are opened in
    order of (crossings, depth) as in `equiv_witness`.
    """
    budget = budget or SearchBudget()
    c_max = budget.crossing_cap(projection.crossings)
    start = _key(projection, allow_reflection)
    started = time.monotonic()
    parents: dict = {start: None}
    heap = [(projection.crossings, 0, 0, start)]
    counter = 1
    expanded = 0
    while heap:
        _, depth, _, key = heapq.heappop(heap)
        if predicate(_representative(key)):
            path = _forward_path(parents, key)
            return Witness(start, key, tuple(path), moves, allow_reflection)
        if len(parents) > budget.node_cap:
            return NotFound("node_cap", _stats(started, len(parents), expanded, c_max))
        if budget.time_cap and time.monotonic() - started > budget.time_cap:
            return NotFound("time_cap", _stats(started, len(parents), expanded, c_max))
        expanded += 1
        for site, neighbour, crossings in _expand(key, moves, c_max, allow_reflection):
            if neighbour not in parents:
                parents[neighbour] = (key, site)
                heapq.heappush(heap, (crossings, depth + 1, counter, neighbour))
                counter += 1
    return NotFound("exhausted", _stats(started, len(parents), expanded, c_max, exhausted=True))
