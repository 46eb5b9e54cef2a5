"""Module for rendering the Markdown audit report."""

from pathlib import Path
from typing import Any

from jinja2 import Environment, FileSystemLoader, StrictUndefined

from ..util.logger_config import logger

TEMPLATE_DIR = Path(__file__).parent / "templates"


def _environment() -> Environment:
    return Environment(
        loader=FileSystemLoader(TEMPLATE_DIR),
        undefined=StrictUndefined,
        trim_blocks=True,
        lstrip_blocks=True,
        keep_trailing_newline=True,
    )


def _table_context(table: dict[str, Any]) -> dict[str, Any]:
    columns: list[str] = []
    for row in table["rows"]:
        for column in row:
            if column not in columns:
                columns.append(column)
    return {**table, "columns": columns}


def render_audit_report(
    summary: dict[str, Any],
    tables: list[dict[str, Any]],
    matrix_rows: list[dict[str, Any]] | None = None,
    quote: str = "",
) -> str:
    template = _environment().get_template("audit_report.md.j2")
    return template.render(
        summary=summary,
        tables=[_table_context(table) for table in tables],
        matrix=summary.get("matrix"),
        matrix_rows=matrix_rows or [],
        contracting=summary.get("contracting"),
        quote=quote,
    )


def generate_file_md_for_audit(
    summary: dict[str, Any],
    tables: list[dict[str, Any]],
    output_path: str | Path,
    matrix_rows: list[dict[str, Any]] | None = None,
    quote: str = "",
    filename: str = "audit_report.md",
) -> Path:
    """Generate the Markdown audit report.

    Args:
        summary: Output of `AuditReport.summary()`
        tables: `TableReport.to_dict()` for every audited table
        output_path: Directory where the file will be saved
        matrix_rows: Output of `DistinctnessMatrix.to_rows()`
        quote: Verbatim text of the cited fact, shown under the cited pairs
        filename: Name of the report

    Returns:
        Path of the written file
    """
    target = Path(output_path) / filename
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(render_audit_report(summary, tables, matrix_rows, quote), encoding="utf-8")
    logger.info(f"Markdown report written to: {target}")
    return target
