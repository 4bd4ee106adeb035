import json

from app.commands.output import parse_records
from app.data.models import OutputFormat
from app.errors import InvariantViolation
from main import cli


def test_dims_for_chords(runner):
    result = runner.invoke(cli, ["dims", "--model", "chords", "--degree", "2"])
    assert result.exit_code == 0
    assert result.stdout == '{"degree":2,"model":"chords_mod_4T_SEP","dim":1}\n'


def test_dims_accepts_full_model_names_and_k(runner):
    result = runner.invoke(cli, ["dims", "--model", "AIkn_mod_IHX_STU2_SEP", "--degree", "3", "--k", "3"])
    assert result.exit_code == 0
    assert json.loads(result.stdout) == {"degree": 3, "model": "AIkn_mod_IHX_STU2_SEP", "k": 3, "dim": 1}


def test_usage_errors_exit_with_two(runner):
    assert runner.invoke(cli, ["dims", "--model", "knots", "--degree", "2"]).exit_code == 2
    assert runner.invoke(cli, ["dims", "--model", "chords", "--degree", "2", "--k", "1"]).exit_code == 2
    assert runner.invoke(cli, ["dims", "--model", "chords", "--degree", "9"]).exit_code == 2
    assert runner.invoke(cli, ["dims", "--model", "chords", "--degree", "2", "--colour"]).exit_code == 2
    assert runner.invoke(cli, ["verify", "everything", "--degree", "2"]).exit_code == 2
    assert runner.invoke(cli, ["table", "--max-degree", "0"]).exit_code == 2


def test_verify_main_in_degree_one(runner):
    result = runner.invoke(cli, ["verify", "main", "--degree", "1"])
    assert result.exit_code == 0
    report = json.loads(result.stdout)
    assert report["verdict"] == "pass"
    assert len(report["values"]) == 4
    assert set(report["values"].values()) == {1}


def test_verify_chain_flags_the_gap(runner):
    result = runner.invoke(cli, ["verify", "chain", "--degree", "3", "--format", "text"])
    assert result.exit_code == 0
    assert "A_2_3:reported-only" in result.stdout
    assert result.stdout.startswith("chain n=3: pass")


def test_verify_csv_columns(runner):
    result = runner.invoke(cli, ["verify", "main", "--degree", "2", "--format", "csv"])
    lines = result.stdout.splitlines()
    assert lines[0] == "statement,n,name,value,verdict"
    assert lines[1] == "main,2,e2_antidiagonal,1,pass"


def test_verify_out_of_cap_is_not_a_failure(runner):
    result = runner.invoke(cli, ["verify", "main", "--degree", "6"])
    assert result.exit_code == 0
    assert json.loads(result.stdout)["verdict"] == "out-of-cap"


def test_output_is_deterministic(runner):
    for arguments in (
        ["dims", "--model", "feynman", "--degree", "3"],
        ["verify", "chain", "--degree", "2", "--format", "csv"],
        ["table", "--max-degree", "2"],
    ):
        first, second = runner.invoke(cli, arguments), runner.invoke(cli, arguments)
        assert first.exit_code == second.exit_code == 0
        assert first.stdout_bytes == second.stdout_bytes


def test_table_formats(runner):
    as_json = runner.invoke(cli, ["table", "--max-degree", "2"]).stdout
    as_csv = runner.invoke(cli, ["table", "--max-degree", "2", "--format", "csv"]).stdout
    assert parse_records(as_json, OutputFormat.JSON) == parse_records(as_csv, OutputFormat.CSV)
    assert len(parse_records(as_json, OutputFormat.JSON)) == 10


def test_snapshot_round_trip(runner, tmp_path):
    path = tmp_path / "dims.json"
    first = runner.invoke(cli, ["snapshot", str(path), "--max-degree", "2"])
    assert first.exit_code == 0
    assert path.exists()
    again = runner.invoke(cli, ["snapshot", str(path), "--max-degree", "2"])
    assert again.exit_code == 0
    assert "matches" in again.stdout


def test_snapshot_mismatch_prints_a_diff(runner, tmp_path):
    path = tmp_path / "dims.json"
    runner.invoke(cli, ["snapshot", str(path), "--max-degree", "2"])
    path.write_text(path.read_text().replace('"dim":1}', '"dim":7}', 1))
    result = runner.invoke(cli, ["snapshot", str(path), "--max-degree", "2"])
    assert result.exit_code == 1
    assert '-{"degree":1' in result.stdout
    assert '"dim":7}' in result.stdout


def test_snapshot_formats_carry_the_same_values(runner, tmp_path):
    json_path, csv_path = tmp_path / "dims.json", tmp_path / "dims.csv"
    runner.invoke(cli, ["snapshot", str(json_path), "--max-degree", "2"])
    runner.invoke(cli, ["snapshot", str(csv_path), "--max-degree", "2", "--format", "csv"])
    from_json = parse_records(json_path.read_text(), OutputFormat.JSON)
    assert from_json == parse_records(csv_path.read_text(), OutputFormat.CSV)


def test_normalize(runner):
    result = runner.invoke(cli, ["normalize", "deg=2;legs=3;(1,(0,2))"])
    assert result.exit_code == 0
    assert result.stdout == "-1 deg=2;legs=3;(0,(1,2))\n"
    monomial = runner.invoke(cli, ["normalize", "--monomial", "[x1_3,x1_2]"])
    assert monomial.stdout == "1 [x1_2,x1_3]\n"


def test_normalize_rejects_bad_text(runner):
    assert runner.invoke(cli, ["normalize", "deg=1;legs=2;(0, 1)"]).exit_code == 2
    assert runner.invoke(cli, ["normalize", "deg=2;legs=2;(0,1)"]).exit_code == 1


def test_table_fails_instead_of_printing_a_partial_table(runner, monkeypatch):
    def failing(model, n, k=None):
        raise InvariantViolation("tree basis", f"{model} n={n}")

    monkeypatch.setattr("app.services.spectral.tables.dimension", failing)
    result = runner.invoke(cli, ["table", "--max-degree", "2"])
    assert result.exit_code == 1
    assert result.stdout == ""
