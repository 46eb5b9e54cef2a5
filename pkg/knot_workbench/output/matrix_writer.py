"""Module for writing the distinctness matrix and table audits (CSV, Excel)."""

from pathlib import Path
from typing import Any

import pandas as pd

from ..util.logger_config import logger


def matrix_frame(rows: list[dict[str, Any]]) -> pd.DataFrame:
    """One line per separated pair of relations."""
    columns = [
        "first",
        "second",
        "probe",
        "curves",
        "equal_under",
        "equal_by",
        "unequal_under",
        "unequal_by",
        "machine_checked",
        "source",
    ]
    return pd.DataFrame(rows, columns=columns)


def grid_frame(numbers: list[int], grid: list[list[str]]) -> pd.DataFrame:
    labels = [f"({n})" for n in numbers]
    return pd.DataFrame(grid, index=labels, columns=labels)


def generate_file_csv_for_matrix(
    rows: list[dict[str, Any]], output_path: str | Path, filename: str = "matrix.csv"
) -> Path:
    """Generate a CSV file with the separation of every pair of relations.

    Args:
        rows: Output of `DistinctnessMatrix.to_rows()`
        output_path: Directory where the file will be saved
        filename: Name of the CSV file

    Returns:
        Path of the written file
    """
    target = Path(output_path) / filename
    target.parent.mkdir(parents=True, exist_ok=True)
    matrix_frame(rows).to_csv(target, index=False, encoding="utf-8")
    logger.info(f"CSV matrix written to: {target}")
    return target


def generate_file_csv_for_table(table: dict[str, Any], output_path: str | Path) -> Path:
    """Generate a CSV file for one audited table (`TableReport.to_dict()`)."""
    target = Path(output_path) / f"table_{table['number']}.csv"
    target.parent.mkdir(parents=True, exist_ok=True)
    pd.DataFrame(table["rows"]).to_csv(target, index=False, encoding="utf-8")
    return target


def generate_file_excel_for_audit(
    tables: list[dict[str, Any]],
    output_path: str | Path,
    matrix_rows: list[dict[str, Any]] | None = None,
    matrix_grid: tuple[list[int], list[list[str]]] | None = None,
    filename: str = "audit.xlsx",
) -> Path:
    """Generate an Excel workbook: one sheet per table, plus the matrix when given.

    Args:
        tables: `TableReport.to_dict()` for every audited table
        output_path: Directory where the file will be saved
        matrix_rows: Output of `DistinctnessMatrix.to_rows()`
        matrix_grid: Relation numbers and `DistinctnessMatrix.to_grid()`
        filename: Name of the workbook

    Returns:
        Path of the written file
    """
    target = Path(output_path) / filename
    target.parent.mkdir(parents=True, exist_ok=True)
    with pd.ExcelWriter(target, engine="openpyxl") as writer:
        for table in tables:
            pd.DataFrame(table["rows"]).to_excel(
                writer, sheet_name=f"table {table['number']}", index=False
            )
        if matrix_rows is not None:
            matrix_frame(matrix_rows).to_excel(writer, sheet_name="pairs", index=False)
        if matrix_grid is not None:
            grid_frame(*matrix_grid).to_excel(writer, sheet_name="matrix")
    logger.info(f"Excel audit written to: {target}")
    return target
