"""Full audit run: conditions, tables, the distinctness matrix and the contracting checks."""

from dataclasses import dataclass, field

from ..config import BudgetConfig, load_budget_config
from ..errors import AuditFailure
from ..util.configuration import settings
from ..util.logger_config import logger
from .certificates import CertificateStore
from .contracting import ContractingReport, audit_macro_and_contracting
from .matrix import DistinctnessMatrix, distinctness_matrix
from .resolver import CellResolver
from .tables import TABLES, TableReport, audit_condition_one


@dataclass
class AuditReport:
    store: CertificateStore
    allow_reflection: bool
    tables: list[TableReport] = field(default_factory=list)
    matrix: DistinctnessMatrix | None = None
    contracting: ContractingReport | None = None
    failed_certificates: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failed_certificates

    def summary(self) -> dict:
        return {
            "allow_reflection": self.allow_reflection,
            "tables": [str(table.number) for table in self.tables],
            "certificates": len(self.store),
            "machine_checked": self.store.machine_checked_count,
            "cited": self.store.cited_count,
            "matrix": self.matrix.summary() if self.matrix else None,
            "contracting": self.contracting.to_dict() if self.contracting else None,
            "failed_certificates": len(self.failed_certificates),
        }


def run_audit(
    tables: tuple[int, ...] | None = None,
    matrix: bool = False,
    contracting: bool = False,
    budgets: BudgetConfig | None = None,
    allow_reflection: bool | None = None,
    reverify: bool = True,
) -> AuditReport:
    """
    Run the requested parts of the audit; with no table given, the condition-1 check and all
    five tables run.

    Raises:
        AuditFailure: If any claim fails or a certificate does not re-verify
    """
    budgets = budgets or load_budget_config()
    if allow_reflection is None:
        allow_reflection = settings.KP_ALLOW_REFLECTION
    store = CertificateStore()
    resolver = CellResolver(store, budgets.matrix, allow_reflection)
    report = AuditReport(store, allow_reflection)

    if tables is None:
        report.tables.append(audit_condition_one(resolver))
        tables = tuple(TABLES)
    for number in tables:
        if number not in TABLES:
            raise ValueError(f"unknown table {number}; tables are 1..5")
        report.tables.append(TABLES[number](resolver))
        logger.info(f"table {number} audited")
    if matrix:
        report.matrix = distinctness_matrix(resolver)
    if contracting:
        report.contracting = audit_macro_and_contracting(store, budgets.macro, allow_reflection)

    if reverify:
        report.failed_certificates = store.verify_all()
        if report.failed_certificates:
            first = report.failed_certificates[0]
            raise AuditFailure(
                f"{len(report.failed_certificates)} certificates do not re-verify", first
            )
    logger.info(
        f"audit: {len(store)} certificates, {store.machine_checked_count} machine-checked, "
        f"{store.cited_count} cited"
    )
    return report
