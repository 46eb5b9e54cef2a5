"""
Macro identities in context, the relation equivalences (10) ~ (11) ~ (12) and
(13) ~ (14) ~ (15), and untangling of the small corpus under the eight contracting sets.
"""

from dataclasses import dataclass, field

from ..config import MacroBudget, SearchBudget
from ..curves.curve_core import KnotProjection, canonical_key
from ..errors import AuditFailure
from ..moves.moves import MoveSet, MoveType, apply, enumerate_moves
from ..search.corpus import enumerate_corpus
from ..search.macros import MACRO_TEMPLATES, simulate_move, untangle
from ..search.search import Witness
from ..util.logger_config import logger
from .certificates import CertificateStore, WitnessSeq
from .relations import CASES, CONTRACTING, EQUIVALENT_CASES, GENERATION


@dataclass
class MacroContext:
    curve: str
    site: dict
    move_type: MoveType
    reproduced: bool
    length: int = 0


@dataclass
class ContractingReport:
    corpus_size: int = 0
    contexts: list[MacroContext] = field(default_factory=list)
    equivalences: dict[str, bool] = field(default_factory=dict)
    generation: dict[int, bool] = field(default_factory=dict)
    untangled: dict[int, int] = field(default_factory=dict)
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def macro_counts(self) -> dict[str, dict[str, int]]:
        counts: dict[str, dict[str, int]] = {}
        for context in self.contexts:
            entry = counts.setdefault(context.move_type.value, {"contexts": 0, "reproduced": 0})
            entry["contexts"] += 1
            entry["reproduced"] += int(context.reproduced)
        return counts

    def to_dict(self) -> dict:
        return {
            "corpus_size": self.corpus_size,
            "macros": self.macro_counts(),
            "equivalences": dict(self.equivalences),
            "generation": {str(case): ok for case, ok in self.generation.items()},
            "untangled": {str(case): n for case, n in self.untangled.items()},
            "failures": list(self.failures),
        }


def macro_contexts(
    corpus: list[KnotProjection], allow_reflection: bool = True
) -> list[MacroContext]:
    """
    Every down or RIII site of every macro-simulated type on the corpus, with whether its
    template reproduces the move.
    """
    contexts = []
    for projection in corpus:
        for move_type, template in MACRO_TEMPLATES.items():
            for site in enumerate_moves(projection, [move_type]):
                if site.kind.delta > 0:
                    continue
                result = apply(projection, site)
                moves = simulate_move(projection, result, template, allow_reflection)
                contexts.append(
                    MacroContext(
                        canonical_key(projection, allow_reflection),
                        site.to_dict(),
                        move_type,
                        moves is not None,
                        len(moves) if moves else 0,
                    )
                )
    return contexts


def check_generation() -> dict[int, bool]:
    """Each generated type's template uses only the case's moves and types generated before."""
    result = {}
    for case, steps in GENERATION.items():
        available = set(CASES[case])
        ok = True
        for generated, template in steps:
            ok = ok and set(MACRO_TEMPLATES[generated]) <= available and set(template) <= available
            available.add(generated)
        result[case] = ok and available == set(MoveType)
    return result


def check_equivalences(contexts: list[MacroContext]) -> dict[str, bool]:
    """
    Within each group of equivalent cases, every RIII type a member lacks is reproduced
    by its template, built from the member's own moves, in every context.
    """
    result = {}
    for group in EQUIVALENT_CASES:
        for case in group:
            moves = CASES[case]
            missing = [t for t in (MoveType.SRIII, MoveType.WRIII) if t not in moves]
            ok = True
            for move_type in missing:
                template = MACRO_TEMPLATES[move_type]
                relevant = [c for c in contexts if c.move_type is move_type]
                ok = ok and set(template) <= set(moves)
                ok = ok and all(c.reproduced for c in relevant)
            result[f"({case})"] = ok
    return result


def audit_macro_and_contracting(
    store: CertificateStore | None = None,
    macro_budget: MacroBudget | None = None,
    allow_reflection: bool = True,
) -> ContractingReport:
    """
    Check the macro identities on the small corpus, the relation equivalences they give, and
    that all eight contracting sets untangle every corpus curve.

    Raises:
        AuditFailure: Listing every failed check
    """
    store = store if store is not None else CertificateStore()
    macro_budget = macro_budget or MacroBudget()
    corpus = enumerate_corpus(macro_budget.corpus_max_crossings, allow_reflection)
    report = ContractingReport(corpus_size=len(corpus))

    report.contexts = macro_contexts(corpus, allow_reflection)
    for context in report.contexts:
        if not context.reproduced:
            report.failures.append(
                f"macro for {context.move_type.value} fails at {context.curve} {context.site}"
            )
    logger.info(f"macro identities: {len(report.contexts)} contexts checked")

    report.equivalences = check_equivalences(report.contexts)
    report.generation = check_generation()
    for name, ok in report.equivalences.items():
        if not ok:
            report.failures.append(f"{name} does not simulate its missing RIII type")
    for case, ok in report.generation.items():
        if not ok:
            report.failures.append(f"({case}) does not generate every move type")

    budget = SearchBudget(node_cap=macro_budget.node_cap)
    for case in CONTRACTING:
        moves: MoveSet = CASES[case]
        count = 0
        for projection in corpus:
            if projection.is_trivial:
                continue
            found = untangle(projection, moves, budget, allow_reflection)
            if isinstance(found, Witness):
                store.add(WitnessSeq.of(case, found))
                count += 1
            else:
                report.failures.append(f"({case}) does not untangle {projection.key}")
        report.untangled[case] = count
        logger.info(f"({case}) untangled {count} curves")

    if report.failures:
        for failure in report.failures:
            logger.error(failure)
        raise AuditFailure(f"{len(report.failures)} contracting checks failed")
    return report


__all__ = [
    "ContractingReport",
    "MacroContext",
    "audit_macro_and_contracting",
    "check_equivalences",
    "check_generation",
    "macro_contexts",
]
