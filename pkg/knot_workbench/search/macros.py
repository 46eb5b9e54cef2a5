"""
Macro identities between move types and the guided untangling built on them.

A single strong (weak) RII is a sequence of two RIs, a weak (strong) RII and a strong
(weak) RIII; a single strong (weak) RIII is two strong RIIs and a weak (strong) RIII.
Templates list the move types of such a sequence; the order in which they occur is left to
`simulate_move`, which searches for it in context.
"""

from collections import Counter
from collections.abc import Sequence

from ..config import SearchBudget
from ..curves.curve_core import TRIVIAL, CanonicalKey, KnotProjection, canonical_key
from ..errors import IllegalSiteError
from ..moves.moves import AppliedMove, MoveSet, MoveType, apply, enumerate_moves
from ..util.logger_config import logger
from .search import (
    NotFound,
    SearchResult,
    Witness,
    _has_enumerated_inverse,
    _representative,
    connecting_site,
    equiv_witness,
    verify_witness,
)

MACRO_TEMPLATES: dict[MoveType, tuple[MoveType, ...]] = {
    MoveType.SRII: (MoveType.RI, MoveType.RI, MoveType.WRII, MoveType.SRIII),
    MoveType.WRII: (MoveType.RI, MoveType.RI, MoveType.SRII, MoveType.WRIII),
    MoveType.SRIII: (MoveType.SRII, MoveType.SRII, MoveType.WRIII),
    MoveType.WRIII: (MoveType.SRII, MoveType.SRII, MoveType.SRIII),
}

MAX_REWRITE_DEPTH = 3


def expand_macro(move_type: MoveType, target: MoveSet) -> tuple[MoveType, ...]:
    """
    Template standing in for one move of `move_type` when only `target` is available.

    A type already in `target` is its own template. Template entries outside `target` are
    expanded again by the caller.

    Raises:
        ValueError: For RI, which no other move type generates
    """
    if move_type in target:
        return (move_type,)
    if move_type not in MACRO_TEMPLATES:
        raise ValueError(f"no macro produces {move_type.value}")
    return MACRO_TEMPLATES[move_type]


def _signature(types: Sequence[MoveType]) -> tuple[str, ...]:
    return tuple(sorted(t.value for t in types))


def _remaining(template: Counter, used: tuple[str, ...]) -> list[MoveType]:
    left = template - Counter(used)
    return [MoveType(value) for value in sorted(left)]


def simulate_move(
    source: KnotProjection,
    target: KnotProjection,
    template: Sequence[MoveType],
    allow_reflection: bool = False,
    c_cap: int | None = None,
) -> list[AppliedMove] | None:
    """
    Meet-in-the-middle search for a sequence from `source` to `target` that uses exactly
    the move types of `template`, in any order.

    Returns:
        The replayable moves, or None when no such sequence exists under the crossing cap
    """
    c_cap = max(source.crossings, target.crossings) + 4 if c_cap is None else c_cap
    start = canonical_key(source, allow_reflection)
    goal = canonical_key(target, allow_reflection)
    wanted = Counter(t.value for t in template)
    total = len(template)
    forward_depth = (total + 1) // 2

    # state (key, sorted types used) -> moves taken from `start` / toward `goal`
    forward: dict[tuple[CanonicalKey, tuple[str, ...]], list[AppliedMove]] = {(start, ()): []}
    frontier = [(start, ())]
    for _ in range(forward_depth):
        following = []
        for key, used in frontier:
            projection = _representative(key)
            for move_type in _remaining(wanted, used):
                for site in enumerate_moves(projection, [move_type]):
                    if projection.crossings + site.kind.delta > c_cap:
                        continue
                    after = canonical_key(apply(projection, site), allow_reflection)
                    state = (after, _signature([*map(MoveType, used), move_type]))
                    if state not in forward:
                        forward[state] = [*forward[(key, used)], AppliedMove(site, key, after)]
                        following.append(state)
        frontier = following
    finished = {state: path for state, path in forward.items() if len(path) == forward_depth}

    backward: dict[tuple[CanonicalKey, tuple[str, ...]], list] = {(goal, ()): []}
    frontier = [(goal, ())]
    for _ in range(total - forward_depth):
        following = []
        for key, used in frontier:
            projection = _representative(key)
            for move_type in _remaining(wanted, used):
                for site in enumerate_moves(projection, [move_type]):
                    if projection.crossings + site.kind.delta > c_cap:
                        continue
                    if not _has_enumerated_inverse(projection, site):
                        continue
                    before = canonical_key(apply(projection, site), allow_reflection)
                    state = (before, _signature([*map(MoveType, used), move_type]))
                    if state not in backward:
                        backward[state] = [(before, key, move_type), *backward[(key, used)]]
                        following.append(state)
        frontier = following

    full = _signature(template)
    for (key, used), path in sorted(finished.items()):
        rest = tuple(sorted((Counter(full) - Counter(used)).elements()))
        steps = backward.get((key, rest))
        if steps is None or len(steps) != total - forward_depth:
            continue
        moves = list(path)
        for before, after, move_type in steps:
            site = connecting_site(before, after, move_type, allow_reflection)
            moves.append(AppliedMove(site, before, after))
        return moves
    return None


def _rewrite(
    moves: Sequence[AppliedMove],
    target: MoveSet,
    budget: SearchBudget,
    allow_reflection: bool,
    depth: int = 0,
) -> list[AppliedMove] | None:
    """Replace every move outside `target` by its macro, recursively."""
    result: list[AppliedMove] = []
    for move in moves:
        move_type = move.kind.move_type
        if move_type in target:
            result.append(move)
            continue
        if depth >= MAX_REWRITE_DEPTH or move_type not in MACRO_TEMPLATES:
            return None
        before, after = _representative(move.before), _representative(move.after)
        replacement = simulate_move(
            before, after, MACRO_TEMPLATES[move_type], allow_reflection
        )
        if replacement is None:
            logger.info(f"macro for {move_type.value} failed at {move.before}; searching")
            found = equiv_witness(before, after, target, budget, allow_reflection)
            if isinstance(found, NotFound):
                return None
            replacement = list(found.moves)
        rewritten = _rewrite(replacement, target, budget, allow_reflection, depth + 1)
        if rewritten is None:
            return None
        result.extend(rewritten)
    return result


def untangle(
    projection: KnotProjection,
    moves: MoveSet,
    budget: SearchBudget | None = None,
    allow_reflection: bool = False,
) -> SearchResult:
    """
    Witness from `projection` to O using only `moves`.

    Untangles under the full move set first, then rewrites every forbidden move through
    the macro identities; falls back to a direct search under `moves`.
    """
    budget = budget or SearchBudget()
    trivial_key = canonical_key(TRIVIAL, allow_reflection)
    base = equiv_witness(projection, TRIVIAL, MoveSet.full(), budget, allow_reflection)
    if isinstance(base, Witness):
        try:
            rewritten = _rewrite(base.moves, moves, budget, allow_reflection)
        except IllegalSiteError as e:
            logger.warning(f"untangle: rewriting failed ({e})")
            rewritten = None
        if rewritten is not None:
            witness = Witness(base.start, trivial_key, tuple(rewritten), moves, allow_reflection)
            if verify_witness(witness):
                return witness
            logger.warning("untangle: rewritten sequence does not replay; searching directly")
    return equiv_witness(projection, TRIVIAL, moves, budget, allow_reflection)
