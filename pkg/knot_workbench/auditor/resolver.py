"""
Turns a claim "curve A and curve B are equal (unequal) under case S" into a certificate.

Resolution order for one cell: parity, C, canonical forms, fixed-crossing classes, the
remaining invariants, witness search, and the cited J+ values last.
"""

from dataclasses import dataclass
from enum import IntEnum

from ..config import SearchBudget
from ..curves.catalog import CATALOG, get_curve
from ..curves.curve_core import CanonicalKey, KnotProjection, canonical_key, projection_from_key
from ..errors import AuditFailure, BudgetExceededError, UndecidableSystemError
from ..moves.moves import MoveSet, MoveType
from ..moves.reduce import decide_equiv, is_decidable
from ..search.search import Witness, equiv_witness, find_in_class, reachable_fixed_c
from ..util.logger_config import logger
from .certificates import (
    INVARIANTS,
    J_PLUS,
    J_PLUS_LOCATION,
    J_PLUS_QUOTE,
    CanonicalFormSeparation,
    Certificate,
    CertificateStore,
    CitedFact,
    InvariantSeparation,
    SingletonClass,
    WitnessSeq,
    invariant_names,
)
from .relations import CASES

RIII_ONLY = MoveSet.of(MoveType.SRIII, MoveType.WRIII)
J_PLUS_SCOPE = MoveSet.of(MoveType.SRII, MoveType.SRIII, MoveType.WRIII)

# Name of the two-crossing member of [P_F] under weak RII and weak RIII, found by search
TWO_CROSSING_FLOWER = "X2"
CURVE_NAMES = frozenset({*CATALOG, TWO_CROSSING_FLOWER})


class Stage(IntEnum):
    CHEAP = 0
    SEARCH = 1
    CITED = 2


@dataclass(frozen=True)
class Probe:
    """A pair of curves used to tell relations apart."""

    name: str
    first: str
    second: str
    # "published" when the pair is the one the classification argument uses, else "discovered"
    source: str = "published"

    def __str__(self) -> str:
        return f"{self.name} ({self.first}, {self.second})"


PROBES: tuple[Probe, ...] = (
    Probe("infinity-trivial", "INF", "O"),
    Probe("trefoil-infinity", "T3", "INF"),
    Probe("trefoil-py", "T3", "PY"),
    Probe("clasp-trivial", "CLASP", "O", source="discovered"),
    Probe("trefoil-trivial", "T3", "O"),
    Probe("seven-four-trivial", "S74", "O"),
    Probe("flower-trivial", "PF", "O"),
    Probe("companion-flower", "PC", "PF"),
    Probe("figure-eight-trivial", "F4", "O"),
    Probe("cinquefoil-trivial", "T5", "O"),
    Probe("flower-two-crossing", "PF", TWO_CROSSING_FLOWER),
)


class CellResolver:
    """
    Certificate producer shared by the table audits and the distinctness matrix.

    Results are cached per (case, curves) and every certificate produced goes to `store`.
    """

    def __init__(
        self,
        store: CertificateStore | None = None,
        budget: SearchBudget | None = None,
        allow_reflection: bool = True,
    ):
        self.store = store if store is not None else CertificateStore()
        self.budget = budget or SearchBudget(node_cap=400_000, time_cap=120.0)
        self.allow_reflection = allow_reflection
        self._values: dict[tuple[str, CanonicalKey], object] = {}
        self._cheap: dict[tuple[int, CanonicalKey, CanonicalKey], Certificate | None] = {}
        self._searched: dict[tuple[int, CanonicalKey, CanonicalKey], Certificate | None] = {}
        self._classes: dict[tuple[MoveSet, CanonicalKey], frozenset[CanonicalKey]] = {}
        self._named: dict[str, CanonicalKey | None] = {}
        self._two_crossing_witness: Witness | None = None

    # curves

    def key_of(self, curve: str | KnotProjection) -> CanonicalKey | None:
        """Canonical key of a catalog name, of X2 (None if not found) or of a projection."""
        if isinstance(curve, KnotProjection):
            return canonical_key(curve, self.allow_reflection)
        if curve not in self._named:
            if curve == TWO_CROSSING_FLOWER:
                witness = self.two_crossing_flower_witness()
                self._named[curve] = witness.end if witness else None
            else:
                self._named[curve] = canonical_key(get_curve(curve), self.allow_reflection)
        return self._named[curve]

    def probe_keys(self, probe: Probe) -> tuple[CanonicalKey, CanonicalKey] | None:
        first, second = self.key_of(probe.first), self.key_of(probe.second)
        if first is None or second is None:
            return None
        return first, second

    def two_crossing_flower_witness(self) -> Witness | None:
        """A weak RII / weak RIII sequence from P_F to some curve with two double points."""
        if self._two_crossing_witness is None:
            found = find_in_class(
                get_curve("PF"),
                CASES[21],
                lambda p: p.crossings == 2,
                self.budget,
                self.allow_reflection,
            )
            if isinstance(found, Witness):
                self._two_crossing_witness = found
                logger.info(f"two-crossing member of [P_F]: {found.end} ({found.length} moves)")
            else:
                logger.warning(f"no two-crossing member of [P_F] found: {found.reason}")
        return self._two_crossing_witness

    def value(self, name: str, key: CanonicalKey):
        cached = (name, key)
        if cached not in self._values:
            self._values[cached] = INVARIANTS[name].compute(projection_from_key(key))
        return self._values[cached]

    def fixed_class(self, moves: MoveSet, key: CanonicalKey) -> frozenset[CanonicalKey]:
        cached = (moves, key)
        if cached not in self._classes:
            self._classes[cached] = reachable_fixed_c(
                projection_from_key(key), moves, self.allow_reflection
            )
        return self._classes[cached]

    # certificate producers

    def by_invariant(
        self, case: int, name: str, first: CanonicalKey, second: CanonicalKey
    ) -> Certificate | None:
        spec = INVARIANTS.get(name)
        if spec is None or not spec.covers(CASES[case]):
            return None
        if spec.versus_trivial and self.key_of("O") not in (first, second):
            return None
        try:
            values = (self.value(name, first), self.value(name, second))
        except BudgetExceededError as e:
            logger.info(f"({case}) {name} skipped: {e}")
            return None
        if values[0] == values[1]:
            return None
        return InvariantSeparation(case, (first, second), False, name, values)

    def _canonical(
        self, case: int, first: CanonicalKey, second: CanonicalKey
    ) -> Certificate | None:
        moves = CASES[case]
        if not len(moves):
            return CanonicalFormSeparation(
                case,
                (first, second),
                first == second,
                None,
                (first, second),
                self.allow_reflection,
            )
        if not is_decidable(moves):
            return None
        try:
            equal, reduction = decide_equiv(
                projection_from_key(first),
                projection_from_key(second),
                moves,
                self.allow_reflection,
            )
        except UndecidableSystemError:
            return None
        return CanonicalFormSeparation(
            case, (first, second), equal, reduction.system, reduction.keys, self.allow_reflection
        )

    def _fixed_class(
        self, case: int, first: CanonicalKey, second: CanonicalKey
    ) -> Certificate | None:
        moves = CASES[case]
        if not len(moves) or not moves <= RIII_ONLY:
            return None
        members = self.fixed_class(moves, first)
        return SingletonClass(
            case, (first, second), second in members, members, self.allow_reflection
        )

    def cheap(self, case: int, first: CanonicalKey, second: CanonicalKey) -> Certificate | None:
        """Certificates needing no search, in resolution order."""
        cached = (case, first, second)
        if cached in self._cheap:
            return self._cheap[cached]
        certificate = None
        if first == second:
            certificate = WitnessSeq.of(
                case, Witness(first, second, (), CASES[case], self.allow_reflection)
            )
        steps = (
            lambda: self.by_invariant(case, "parity", first, second),
            lambda: self.by_invariant(case, "C", first, second),
            lambda: self._canonical(case, first, second),
            lambda: self._fixed_class(case, first, second),
            *(
                (lambda name=name: self.by_invariant(case, name, first, second))
                for name in invariant_names()
                if name not in ("parity", "C")
            ),
        )
        for step in steps:
            if certificate is not None:
                break
            certificate = step()
        self._cheap[cached] = certificate
        return certificate

    def search(self, case: int, first: CanonicalKey, second: CanonicalKey) -> Certificate | None:
        """Equality by witness search; a miss is cached and never read as inequality."""
        cached = (case, first, second)
        if cached not in self._searched:
            found = equiv_witness(
                projection_from_key(first),
                projection_from_key(second),
                CASES[case],
                self.budget,
                self.allow_reflection,
            )
            if isinstance(found, Witness):
                self._searched[cached] = WitnessSeq.of(case, found)
            else:
                logger.info(f"({case}) {first} ~ {second}: search inconclusive ({found.reason})")
                self._searched[cached] = None
        return self._searched[cached]

    def cited(self, case: int, first: CanonicalKey, second: CanonicalKey) -> Certificate | None:
        """[∞] ≠ [3_1] from the quoted J+ values, unless a J+ implementation is registered."""
        if J_PLUS in INVARIANTS or not CASES[case] <= J_PLUS_SCOPE:
            return None
        if {first, second} != {self.key_of("INF"), self.key_of("T3")}:
            return None
        return CitedFact(case, (first, second), False, J_PLUS_QUOTE, J_PLUS_LOCATION)

    def resolve(
        self, case: int, first: CanonicalKey, second: CanonicalKey, stage: Stage = Stage.SEARCH
    ) -> Certificate | None:
        certificate = self.cheap(case, first, second)
        if certificate is None and stage >= Stage.CITED:
            certificate = self.cited(case, first, second)
        if certificate is None and stage >= Stage.SEARCH:
            certificate = self.search(case, first, second)
        return certificate

    def expect(
        self, case: int, first: str | CanonicalKey, second: str | CanonicalKey, equal: bool
    ) -> Certificate:
        """
        Certificate for a claim of the classification, added to the store.

        Raises:
            AuditFailure: If the claim cannot be certified or the opposite is certified
        """
        keys = tuple(self.key_of(c) if c in CURVE_NAMES else c for c in (first, second))
        if None in keys:
            raise AuditFailure(f"({case}): curve {first} or {second} is unavailable")
        a, b = keys
        certificate = self.cheap(case, a, b)
        if certificate is None:
            certificate = self.search(case, a, b) if equal else self.cited(case, a, b)
        claim = "=" if equal else "≠"
        if certificate is None:
            raise AuditFailure(f"({case}): no certificate for [{first}] {claim} [{second}]")
        if certificate.equal != equal:
            raise AuditFailure(
                f"({case}): expected [{first}] {claim} [{second}], certified the opposite",
                certificate,
            )
        logger.info(f"({case}) [{first}] {claim} [{second}] by {certificate.kind.value}")
        return self.store.add(certificate)


__all__ = [
    "PROBES",
    "TWO_CROSSING_FLOWER",
    "CellResolver",
    "Probe",
    "Stage",
]
