"""
Certificates backing every equality and inequality claimed by the audit, and the invariant
registry used to produce and re-check invariant separations.

Every certificate except a cited fact re-verifies from scratch: witnesses replay,
invariants and canonical forms are recomputed, fixed-crossing classes are re-enumerated.
"""

from collections.abc import Callable
from dataclasses import dataclass, field
from enum import Enum
from typing import Any

from ..curves.curve_core import (
    TRIVIAL,
    CanonicalKey,
    KnotProjection,
    canonical_key,
    in_strong13_family,
    projection_from_key,
)
from ..curves.faces import big_c, circle_number, coh_odd, seifert_number
from ..knots.knot_layer import jones, lift_K, w_invariant
from ..moves.moves import MoveSet, MoveType
from ..moves.reduce import ReductionSystem, decide_equiv
from ..search.search import Witness, reachable_fixed_c, verify_witness
from ..util.logger_config import logger
from .relations import CASES

J_PLUS = "J+"
J_PLUS_QUOTE = "J_S^+(∞)=0 ≠ 2 = J_S^+(3_1)"
J_PLUS_LOCATION = "Arnold invariant J+ under strong RII and RIII, case (14)"


class CertificateKind(str, Enum):
    WITNESS_SEQ = "witness_seq"
    CANONICAL_FORM = "canonical_form"
    SINGLETON_CLASS = "singleton_class"
    INVARIANT_SEPARATION = "invariant_separation"
    CITED_FACT = "cited_fact"


KIND_ORDER = {kind: i for i, kind in enumerate(CertificateKind)}


@dataclass(frozen=True)
class InvariantSpec:
    """A curve invariant and the move types it is unchanged under."""

    name: str
    compute: Callable[[KnotProjection], Any]
    scope: MoveSet
    description: str
    # Only separates a curve from O: membership of [O] implies the property
    versus_trivial: bool = False

    def covers(self, moves: MoveSet) -> bool:
        return moves <= self.scope


def _jones_of_lift(projection: KnotProjection) -> str:
    return jones(lift_K(projection)).format()


INVARIANTS: dict[str, InvariantSpec] = {}


def register_invariant(
    name: str,
    compute: Callable[[KnotProjection], Any],
    scope: MoveSet,
    description: str = "",
    versus_trivial: bool = False,
) -> InvariantSpec:
    """
    Add an invariant to the registry. Registering an implementation of J+ (name "J+",
    unchanged under strong RII and both RIII) replaces the cited J+ values in the audit.
    """
    spec = InvariantSpec(name, compute, scope, description, versus_trivial)
    INVARIANTS[name] = spec
    logger.info(f"registered invariant {name} with scope {scope.label}")
    return spec


def unregister_invariant(name: str) -> None:
    INVARIANTS.pop(name, None)


def _register_builtin() -> None:
    register_invariant(
        "parity",
        lambda p: p.crossings % 2,
        MoveSet.of(MoveType.SRII, MoveType.WRII, MoveType.SRIII, MoveType.WRIII),
        "c(P) mod 2",
    )
    register_invariant(
        "C",
        big_c,
        MoveSet.of(MoveType.WRII, MoveType.SRIII, MoveType.WRIII),
        "C(P): 0 for O, 1 otherwise",
    )
    register_invariant(
        "coh_odd", coh_odd, MoveSet.of(MoveType.WRII, MoveType.SRIII), "coherent odd-gon exists"
    )
    register_invariant(
        "s", seifert_number, MoveSet.of(MoveType.WRII, MoveType.WRIII), "Seifert circle number"
    )
    register_invariant(
        "tau", circle_number, MoveSet.of(MoveType.RI, MoveType.SRII), "circle number |tau(P)|"
    )
    register_invariant(
        "jones",
        _jones_of_lift,
        MoveSet.of(MoveType.RI, MoveType.WRIII),
        "Jones polynomial of the positive lift",
    )
    register_invariant(
        "W",
        w_invariant,
        MoveSet.of(MoveType.RI, MoveType.WRII, MoveType.WRIII),
        "W(P) = tr(P) - 2g(P)",
    )
    register_invariant(
        "strong13_family",
        in_strong13_family,
        MoveSet.of(MoveType.RI, MoveType.SRIII),
        "connected sum of curves shaped like infinity and trefoil curves",
        versus_trivial=True,
    )


_register_builtin()

# Separation order among invariants; plug-ins come after the built-in ones
INVARIANT_ORDER = ("coh_odd", "s", "tau", "jones", "W", "strong13_family")


def invariant_names() -> list[str]:
    builtin = [name for name in INVARIANT_ORDER if name in INVARIANTS]
    extra = sorted(name for name in INVARIANTS if name not in INVARIANT_ORDER)
    return builtin + extra


def _rep(key: CanonicalKey) -> KnotProjection:
    return projection_from_key(key)


@dataclass(frozen=True)
class Certificate:
    """Evidence that two curves are equal (or unequal) under one case's relation."""

    case: int
    curves: tuple[CanonicalKey, CanonicalKey]
    equal: bool

    kind = CertificateKind.CITED_FACT

    @property
    def machine_checked(self) -> bool:
        return True

    def verify(self) -> bool:
        raise NotImplementedError

    def payload(self) -> dict:
        return {}

    def to_dict(self) -> dict:
        data = {
            "relation": self.case,
            "moves": [t.value for t in CASES[self.case]],
            "curves": list(self.curves),
            "claim": "equal" if self.equal else "unequal",
            "kind": self.kind.value,
            "machine_checked": self.machine_checked,
            "payload": self.payload(),
        }
        return data

    def sort_key(self) -> tuple:
        return (self.case, KIND_ORDER[self.kind], self.curves)


@dataclass(frozen=True)
class WitnessSeq(Certificate):
    witness: Witness = field(default=None)

    kind = CertificateKind.WITNESS_SEQ

    @classmethod
    def of(cls, case: int, witness: Witness) -> "WitnessSeq":
        return cls(case, (witness.start, witness.end), True, witness)

    def verify(self) -> bool:
        if not self.witness.move_set <= CASES[self.case]:
            logger.warning(f"witness moves {self.witness.move_set} exceed case ({self.case})")
            return False
        if (self.witness.start, self.witness.end) != self.curves:
            return False
        return verify_witness(self.witness)

    def payload(self) -> dict:
        return self.witness.to_dict()


@dataclass(frozen=True)
class CanonicalFormSeparation(Certificate):
    """Reduced canonical keys; `system` None means plain sphere isotopy."""

    system: ReductionSystem | None = None
    reduced: tuple[CanonicalKey, CanonicalKey] = ("", "")
    allow_reflection: bool = False

    kind = CertificateKind.CANONICAL_FORM

    def verify(self) -> bool:
        first, second = (_rep(key) for key in self.curves)
        if self.system is None:
            if CASES[self.case] != MoveSet.of():
                return False
            keys = (
                canonical_key(first, self.allow_reflection),
                canonical_key(second, self.allow_reflection),
            )
            return keys == self.reduced and (keys[0] == keys[1]) == self.equal
        if self.system.move_set != CASES[self.case]:
            return False
        equal, certificate = decide_equiv(first, second, self.system, self.allow_reflection)
        return equal == self.equal and certificate.keys == self.reduced

    def payload(self) -> dict:
        return {
            "system": self.system.value if self.system else "isotopy",
            "reduced": list(self.reduced),
        }


@dataclass(frozen=True)
class SingletonClass(Certificate):
    """
    The complete class of `curves[0]` under RIII-only moves. With distinct curves it
    claims the second curve lies outside that class; with equal curves it records the class.
    """

    members: frozenset[CanonicalKey] = frozenset()
    allow_reflection: bool = False

    kind = CertificateKind.SINGLETON_CLASS

    def verify(self) -> bool:
        try:
            members = reachable_fixed_c(
                _rep(self.curves[0]), CASES[self.case], self.allow_reflection
            )
        except ValueError:
            return False
        if members != self.members:
            return False
        return (self.curves[1] in members) == self.equal

    def payload(self) -> dict:
        return {"class_size": len(self.members), "members": sorted(self.members)}


@dataclass(frozen=True)
class InvariantSeparation(Certificate):
    invariant: str = ""
    values: tuple[Any, Any] = (None, None)

    kind = CertificateKind.INVARIANT_SEPARATION

    def verify(self) -> bool:
        spec = INVARIANTS.get(self.invariant)
        if spec is None or not spec.covers(CASES[self.case]):
            return False
        if spec.versus_trivial and canonical_key(TRIVIAL) not in self.curves:
            return False
        values = tuple(spec.compute(_rep(key)) for key in self.curves)
        return values == tuple(self.values) and values[0] != values[1]

    def payload(self) -> dict:
        spec = INVARIANTS.get(self.invariant)
        return {
            "invariant": self.invariant,
            "values": list(self.values),
            "scope": [t.value for t in spec.scope] if spec else [],
        }


@dataclass(frozen=True)
class CitedFact(Certificate):
    """A value pair quoted verbatim; not re-checkable."""

    quote: str = ""
    location: str = ""

    kind = CertificateKind.CITED_FACT

    @property
    def machine_checked(self) -> bool:
        return False

    def verify(self) -> bool:
        return True

    def payload(self) -> dict:
        return {"cited_quote": self.quote, "location": self.location}

    def to_dict(self) -> dict:
        return {**super().to_dict(), "cited_quote": self.quote}


class CertificateStore:
    """Append-only collection; flushed in a deterministic order."""

    def __init__(self):
        self._certificates: list[Certificate] = []
        self._seen: set[tuple] = set()

    def add(self, certificate: Certificate) -> Certificate:
        identity = (certificate.case, certificate.kind, certificate.curves, certificate.equal)
        if identity not in self._seen:
            self._seen.add(identity)
            self._certificates.append(certificate)
        return certificate

    def __len__(self) -> int:
        return len(self._certificates)

    def __iter__(self):
        return iter(self.flush())

    def flush(self) -> list[Certificate]:
        return sorted(self._certificates, key=Certificate.sort_key)

    @property
    def machine_checked_count(self) -> int:
        return sum(1 for c in self._certificates if c.machine_checked)

    @property
    def cited_count(self) -> int:
        return len(self._certificates) - self.machine_checked_count

    def verify_all(self) -> list[Certificate]:
        """Certificates failing re-verification."""
        return [c for c in self.flush() if not c.verify()]

    def to_dict(self) -> dict:
        return {
            "certificates": [c.to_dict() for c in self.flush()],
            "machine_checked": self.machine_checked_count,
            "cited": self.cited_count,
        }
