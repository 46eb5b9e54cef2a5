"""Output package for writing certificates, audit tables, the matrix and corpora."""

from .certificate_writer import generate_file_json_for_certificates, generate_file_json_for_witness
from .corpus_writer import format_curve, generate_file_txt_for_corpus
from .matrix_writer import (
    generate_file_csv_for_matrix,
    generate_file_csv_for_table,
    generate_file_excel_for_audit,
)
from .report_writer import generate_file_md_for_audit, render_audit_report

__all__ = [
    # Certificate output functions
    "generate_file_json_for_certificates",
    "generate_file_json_for_witness",
    # Audit output functions
    "generate_file_csv_for_matrix",
    "generate_file_csv_for_table",
    "generate_file_excel_for_audit",
    "generate_file_md_for_audit",
    "render_audit_report",
    # Corpus output functions
    "format_curve",
    "generate_file_txt_for_corpus",
]
