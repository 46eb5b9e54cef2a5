import pytest

from knot_workbench.main import build_parser, main
from knot_workbench.util.configuration import settings


def test_inv_on_catalog_curve(capsys, cli_json):
    assert main(["inv", "@T3"]) == 0
    (summary,) = cli_json(capsys.readouterr().out)
    assert summary["c"] == 3
    assert summary["s"] == 2


def test_inv_on_file(tmp_path, capsys, cli_json):
    path = tmp_path / "curves.txt"
    path.write_text("O\n1 1\n", encoding="utf-8")
    assert main(["inv", str(path)]) == 0
    assert [s["c"] for s in cli_json(capsys.readouterr().out)] == [0, 1]


def test_knot(capsys, cli_json):
    assert main(["knot", "@T3"]) == 0
    (summary,) = cli_json(capsys.readouterr().out)
    assert summary["tr"] == 2


def test_reduce(capsys, cli_json):
    assert main(["reduce", "--system", "2wr", "@T3"]) == 0
    (result,) = cli_json(capsys.readouterr().out)
    assert result["reduced_crossings"] == 1
    assert len(result["moves"]) == 1


def test_equiv_canon_strict(capsys, cli_json):
    assert main(["equiv-canon", "--system", "2sr", "--strict", "@T3", "@INF"]) == 3
    assert cli_json(capsys.readouterr().out)["equal"] is False


def test_equiv_writes_witness(tmp_path, capsys, cli_json):
    target = tmp_path / "witness.json"
    assert main(["equiv", "--moves", "RI", "-o", str(target), "@INF", "@O"]) == 0
    assert len(cli_json(capsys.readouterr().out)["moves"]) == 1
    assert target.exists()


def test_untangle(capsys, cli_json):
    assert main(["untangle", "--moves", "RI,sRII,sRIII", "@INF"]) == 0
    (witness,) = cli_json(capsys.readouterr().out)
    assert witness["move_set"] == ["RI", "sRII", "sRIII"]


def test_enumerate(tmp_path, capsys, cli_json):
    target = tmp_path / "corpus.txt"
    assert main(["enumerate", "--max-c", "1", "-o", str(target)]) == 0
    summary = cli_json(capsys.readouterr().out)
    assert summary["curves"] == 2
    assert summary["by_crossings"] == {"0": 1, "1": 1}
    assert target.read_text(encoding="utf-8").startswith("#")


@pytest.mark.parametrize(
    "argv",
    [
        ["inv", "@NOPE"],
        ["inv", "missing-file.txt"],
        ["reduce", "--system", "9x", "@T3"],
        ["equiv", "--moves", "RIV", "@T3", "@O"],
    ],
)
def test_errors_exit_with_one(argv):
    assert main(argv) == 1


def test_audit_arguments():
    args = build_parser().parse_args(
        ["--no-reflection", "audit", "--table", "3", "--table", "5", "--matrix", "-o", "c.json"]
    )
    assert args.reflection is False
    assert args.table == [3, 5]
    assert args.matrix
    assert args.output == "c.json"


def test_audit_one_table(tmp_path, capsys, cli_json):
    out = tmp_path / "certs.json"
    reports = tmp_path / "reports"
    argv = ["audit", "--table", "1", "-o", str(out), "--report-dir", str(reports)]
    assert main(argv) == 0
    summary = cli_json(capsys.readouterr().out)
    assert summary["tables"] == ["1"]
    assert out.exists()
    assert (reports / "table_1.csv").exists()
    assert (reports / "audit.xlsx").exists()
    assert (reports / "audit_report.md").exists()


def test_reduce_random_uses_configured_seed(capsys, cli_json):
    assert main(["reduce", "--system", "2wr", "--random", "@T3"]) == 0
    (result,) = cli_json(capsys.readouterr().out)
    assert result["seed"] == settings.KP_RANDOM_SEED
    assert result["reduced_crossings"] == 1


def test_reduce_explicit_seed_wins(capsys, cli_json):
    assert main(["reduce", "--system", "2wr", "--random", "--seed", "3", "@T3"]) == 0
    (result,) = cli_json(capsys.readouterr().out)
    assert result["seed"] == 3


def test_enumerate_refuses_more_than_the_corpus_cap(tmp_path):
    budget = tmp_path / "budgets.yaml"
    budget.write_text("corpus:\n  exhaustive_max_crossings: 2\n", encoding="utf-8")
    assert main(["--budget", str(budget), "enumerate", "--max-c", "3"]) == 1


def test_audit_reports_default_to_output_dir(tmp_path, monkeypatch, capsys):
    monkeypatch.setattr(settings, "KP_OUTPUT_DIR", str(tmp_path / "default"))
    assert main(["audit", "--table", "1"]) == 0
    assert (tmp_path / "default" / "table_1.csv").exists()
