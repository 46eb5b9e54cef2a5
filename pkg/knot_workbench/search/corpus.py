"""
Corpus of all projections up to a crossing number.

Exhaustive mode walks every double-occurrence word, drops words failing the interlacement
parity test, keeps one word per rotation/reversal class and realizes it in every spherical
configuration; keys remove the remaining duplicates. The move closure of O gives an
independent cross-check.
"""

from collections.abc import Iterator

from ..config import load_budget_config
from ..curves.curve_core import (
    TRIVIAL,
    CanonicalKey,
    KnotProjection,
    canonical_key,
    interlacement_parity_ok,
    projection_from_key,
    realizations,
)
from ..errors import BudgetExceededError
from ..moves.moves import MoveSet, apply, enumerate_moves
from ..util.logger_config import logger


def double_occurrence_words(n: int) -> Iterator[tuple[int, ...]]:
    """Every word on labels 1..n with each label twice, labels numbered by first appearance."""
    word: list[int] = []
    opened: list[int] = []

    def extend(next_label: int) -> Iterator[tuple[int, ...]]:
        if len(word) == 2 * n:
            yield tuple(word)
            return
        if next_label <= n:
            word.append(next_label)
            opened.append(next_label)
            yield from extend(next_label + 1)
            opened.pop()
            word.pop()
        for index, label in enumerate(list(opened)):
            word.append(label)
            del opened[index]
            yield from extend(next_label)
            opened.insert(index, label)
            word.pop()

    if n == 0:
        yield ()
        return
    yield from extend(1)


def _renumbered(word: list[int]) -> tuple[int, ...]:
    relabel: dict[int, int] = {}
    return tuple(relabel.setdefault(label, len(relabel) + 1) for label in word)


def cyclic_word_form(word: tuple[int, ...]) -> tuple[int, ...]:
    """Least renumbered reading of the word over all starts and both directions."""
    m = len(word)
    if m == 0:
        return word
    best = None
    for start in range(m):
        for step in (1, -1):
            candidate = _renumbered([word[(start + step * k) % m] for k in range(m)])
            if best is None or candidate < best:
                best = candidate
    return best


def enumerate_corpus(
    c_max: int, allow_reflection: bool = False, limit: int | None = None
) -> list[KnotProjection]:
    """
    All sphere-isotopy classes with at most `c_max` double points, as canonical
    representatives sorted by (crossings, key).

    Raises:
        BudgetExceededError: If `c_max` is above `limit` (default: the `corpus` section of
            the budget file)
    """
    limit = load_budget_config().corpus_max_crossings if limit is None else limit
    if c_max > limit:
        raise BudgetExceededError(f"exhaustive corpus is capped at c <= {limit}, got {c_max}")
    keys: set[CanonicalKey] = {canonical_key(TRIVIAL, allow_reflection)}
    for n in range(1, c_max + 1):
        seen_words: set[tuple[int, ...]] = set()
        before = len(keys)
        for word in double_occurrence_words(n):
            if not interlacement_parity_ok(word):
                continue
            form = cyclic_word_form(word)
            if form in seen_words:
                continue
            seen_words.add(form)
            for projection in realizations(form):
                keys.add(canonical_key(projection, allow_reflection))
        logger.info(f"corpus: {len(keys) - before} curves with {n} double points")
    return sorted(
        (projection_from_key(key) for key in keys), key=lambda p: (p.crossings, p.key)
    )


def move_closure(
    c_max: int, moves: MoveSet | None = None, allow_reflection: bool = False
) -> frozenset[CanonicalKey]:
    """Keys reachable from O without ever exceeding `c_max` double points."""
    moves = MoveSet.full() if moves is None else moves
    start = canonical_key(TRIVIAL, allow_reflection)
    seen = {start}
    stack = [start]
    while stack:
        projection = projection_from_key(stack.pop())
        for site in enumerate_moves(projection, moves):
            if projection.crossings + site.kind.delta > c_max:
                continue
            key = canonical_key(apply(projection, site), allow_reflection)
            if key not in seen:
                seen.add(key)
                stack.append(key)
    return frozenset(seen)


def cross_check(c_max: int, allow_reflection: bool = False) -> dict:
    """Compare exhaustive enumeration with the move closure of O under the same cap."""
    enumerated = {
        canonical_key(p, allow_reflection) for p in enumerate_corpus(c_max, allow_reflection)
    }
    closure = move_closure(c_max, allow_reflection=allow_reflection)
    report = {
        "c_max": c_max,
        "enumerated": len(enumerated),
        "closure": len(closure),
        "only_enumerated": sorted(enumerated - closure),
        "only_closure": sorted(closure - enumerated),
    }
    if report["only_closure"]:
        logger.error(f"move closure reached unenumerated curves: {report['only_closure']}")
    return report
