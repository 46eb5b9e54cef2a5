"""The 32 relations, their certificates, table audits and the distinctness matrix."""

from .audit import AuditReport, run_audit
from .certificates import (
    INVARIANTS,
    J_PLUS,
    J_PLUS_QUOTE,
    CanonicalFormSeparation,
    Certificate,
    CertificateKind,
    CertificateStore,
    CitedFact,
    InvariantSeparation,
    InvariantSpec,
    SingletonClass,
    WitnessSeq,
    register_invariant,
    unregister_invariant,
)
from .contracting import ContractingReport, audit_macro_and_contracting
from .matrix import DistinctnessMatrix, Separation, distinctness_matrix
from .relations import (
    CANONICAL_CASES,
    CASES,
    CONTRACTING,
    RelationId,
    case_of,
    canonical_relations,
    relation_pairs,
)
from .resolver import PROBES, CellResolver, Probe, Stage
from .tables import TABLES, TableReport, TableRow, audit_conditions, audit_tables

__all__ = [
    "CANONICAL_CASES",
    "CASES",
    "CONTRACTING",
    "INVARIANTS",
    "J_PLUS",
    "J_PLUS_QUOTE",
    "PROBES",
    "TABLES",
    "AuditReport",
    "CanonicalFormSeparation",
    "CellResolver",
    "Certificate",
    "CertificateKind",
    "CertificateStore",
    "CitedFact",
    "ContractingReport",
    "DistinctnessMatrix",
    "InvariantSeparation",
    "InvariantSpec",
    "Probe",
    "RelationId",
    "Separation",
    "SingletonClass",
    "Stage",
    "TableReport",
    "TableRow",
    "WitnessSeq",
    "audit_conditions",
    "audit_macro_and_contracting",
    "audit_tables",
    "canonical_relations",
    "case_of",
    "distinctness_matrix",
    "register_invariant",
    "relation_pairs",
    "run_audit",
    "unregister_invariant",
]
