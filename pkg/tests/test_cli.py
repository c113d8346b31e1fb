import csv as csv_mod
import io
import json

from click.testing import CliRunner

from siegel2.cli import main, parse_record

runner = CliRunner()


def run(*args):
    return runner.invoke(main, list(args))


def test_decompose_text():
    r = run("decompose", "--k", "4", "--part", "M")
    assert r.exit_code == 0
    assert r.output.strip() == "s[6] + s[4,2] + s[2^3]  (dim 15)"


def test_decompose_conjectural_note():
    r = run("decompose", "--k", "3", "--j", "6", "--part", "S")
    assert r.exit_code == 0
    assert "s[1^6]" in r.output
    assert "conjectural: k=3 Eisenstein convention" in r.output


def test_unsupported_region_exit_code():
    r = run("decompose", "--k", "2", "--j", "4")
    assert r.exit_code == 3
    assert "unsupported" in r.output


def test_usage_errors():
    assert run("decompose", "--k", "4", "--j", "3").exit_code == 2
    assert run("decompose", "--k", "4", "--part", "Z").exit_code == 2
    assert run("table", "--k", "4..6", "--part", "M,Z").exit_code == 2
    assert run("euler", "--l", "1", "--m", "3").exit_code == 2


def test_decompose_jsonl_roundtrip():
    r = run("decompose", "--k", "8", "--part", "Q", "--format", "jsonl")
    assert r.exit_code == 0
    rec = parse_record(r.output.strip())
    assert rec["k"] == 8 and rec["j"] == 0
    assert rec["group"] == "gamma2" and rec["part"] == "Q"
    assert rec["dimension"] == 30
    assert rec["conjectural"] is False
    assert rec["multiplicities"]["[4,2]"] == 1
    assert rec["multiplicities"]["[3,2,1]"] == 1
    assert rec["multiplicities"]["[2,2,2]"] == 1
    assert rec["multiplicities"]["[6]"] == 0
    assert list(rec["multiplicities"])[0] == "[6]"


def test_table_formats_agree():
    args = ("table", "--k", "4..8", "--j", "0", "--part", "M,E")
    jl = run(*args, "--format", "jsonl")
    csv = run(*args, "--format", "csv")
    latex = run(*args, "--format", "latex")
    assert jl.exit_code == csv.exit_code == latex.exit_code == 0
    records = [json.loads(line) for line in jl.output.splitlines()]
    assert len(records) == 10
    csv_rows = list(csv_mod.reader(io.StringIO(csv.output)))
    header = csv_rows[0]
    assert len(csv_rows) == 11
    for rec, line in zip(records, csv_rows[1:]):
        row = dict(zip(header, line))
        assert int(row["k"]) == rec["k"]
        assert row["part"] == rec["part"]
        assert int(row["dimension"]) == rec["dimension"]
        for part, mult in rec["multiplicities"].items():
            assert int(row[part]) == mult
    assert latex.output.startswith(r"\begin{array}")
    assert r"\end{array}" in latex.output


def test_euler_full():
    r = run("euler", "--l", "0", "--m", "0")
    assert r.exit_code == 0
    assert r.output.strip() == "2*s[6] - s[5,1] - s[4,2] + s[3,2,1]  (dim 4)"


def test_euler_eis_piece():
    r = run("euler", "--l", "1", "--m", "1", "--piece", "eis")
    assert r.exit_code == 0
    assert r.output.strip() == "-s[4,1^2] - s[3^2]  (dim -15)"


def test_euler_odd_weight_is_zero():
    r = run("euler", "--l", "2", "--m", "1")
    assert r.exit_code == 0
    assert r.output.strip() == "0  (dim 0)"


def test_group_restriction():
    r = run("decompose", "--k", "4", "--group", "sp4z", "--format", "jsonl")
    rec = parse_record(r.output.strip())
    assert rec["dimension"] == 1
    assert rec["multiplicities"] == {}
    g1 = run("decompose", "--k", "4", "--group", "gamma1", "--format", "jsonl")
    rec1 = parse_record(g1.output.strip())
    assert rec1["dimension"] == 5
    assert rec1["multiplicities"]["[3]"] == 3


def test_verify_command():
    r = run("verify", "--max-weight", "16")
    assert r.exit_code == 0
    assert r.output.startswith("PASS:")
