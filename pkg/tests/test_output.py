import json

import pandas as pd

from knot_workbench.auditor import TableReport, TableRow
from knot_workbench.curves import get_curve, read_gauss_file
from knot_workbench.output import (
    format_curve,
    generate_file_csv_for_matrix,
    generate_file_csv_for_table,
    generate_file_excel_for_audit,
    generate_file_json_for_certificates,
    generate_file_json_for_witness,
    generate_file_md_for_audit,
    generate_file_txt_for_corpus,
    render_audit_report,
)

MATRIX_ROW = {
    "first": 11,
    "second": 14,
    "probe": "trefoil-infinity",
    "curves": "T3 / INF",
    "equal_under": 11,
    "equal_by": "witness_seq",
    "unequal_under": 14,
    "unequal_by": "cited_fact",
    "machine_checked": False,
    "source": "published",
}

SUMMARY = {
    "allow_reflection": True,
    "tables": ["3"],
    "certificates": 2,
    "machine_checked": 1,
    "cited": 1,
    "matrix": {
        "pairs": 1,
        "complete": False,
        "machine_checked": 0,
        "cited": 1,
        "coverage": 0.0,
        "published_probes": 1,
        "discovered_probes": 0,
        "cited_pairs": [[11, 14]],
    },
    "contracting": None,
    "failed_certificates": 0,
}


def _table():
    row = TableRow(30, {"[3_1] vs [4_1]": "="}, ["[3_1] = [4_1]"])
    return TableReport(3, "RI group", [row]).to_dict()


def test_certificates_json(tmp_path):
    data = {"certificates": [], "machine_checked": 0, "cited": 0}
    path = generate_file_json_for_certificates(data, tmp_path)
    assert path.name == "certificates.json"
    assert json.loads(path.read_text(encoding="utf-8")) == data
    named = generate_file_json_for_certificates(data, tmp_path / "run" / "store.json")
    assert named.exists()


def test_witness_json(tmp_path):
    path = generate_file_json_for_witness({"found": False}, tmp_path / "w.json")
    assert json.loads(path.read_text(encoding="utf-8")) == {"found": False}


def test_matrix_csv(tmp_path):
    path = generate_file_csv_for_matrix([MATRIX_ROW], tmp_path)
    frame = pd.read_csv(path)
    assert list(frame["unequal_by"]) == ["cited_fact"]


def test_table_csv(tmp_path):
    path = generate_file_csv_for_table(_table(), tmp_path)
    assert path.name == "table_3.csv"
    assert list(pd.read_csv(path)["case"]) == [30]


def test_excel_workbook(tmp_path):
    grid = ([11, 14], [["", "trefoil-infinity"], ["trefoil-infinity", ""]])
    path = generate_file_excel_for_audit([_table()], tmp_path, [MATRIX_ROW], grid)
    sheets = pd.read_excel(path, sheet_name=None, engine="openpyxl")
    assert set(sheets) == {"table 3", "pairs", "matrix"}


def test_markdown_report(tmp_path):
    text = render_audit_report(SUMMARY, [_table()], [MATRIX_ROW], "J quote")
    assert "## Table 3: RI group" in text
    assert "| (11) / (14) | T3 / INF |" in text
    assert "> J quote" in text
    path = generate_file_md_for_audit(SUMMARY, [_table()], tmp_path, [MATRIX_ROW], "J quote")
    assert path.read_text(encoding="utf-8") == text


def test_corpus_file_reads_back(tmp_path, small_corpus):
    path = generate_file_txt_for_corpus(small_corpus, tmp_path / "corpus.txt", header="c <= 4")
    curves = read_gauss_file(path)
    assert [p.key for p in curves] == [p.key for p in small_corpus]


def test_format_curve():
    assert format_curve(get_curve("O")) == "O"
    assert format_curve(get_curve("INF")).endswith("# 1 1 [-]")
