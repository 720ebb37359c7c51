import json

import pytest

from kronstab.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_kron(capsys):
    code, out, _ = run(capsys, "kron", "2,1 / 2,1 / 2,1")
    assert code == 0
    assert out.splitlines() == ["n = 3", "1"]
    code, out, _ = run(capsys, "kron", "1 / 1 / 1")
    assert code == 0 and out.splitlines()[-1] == "1"
    code, out, _ = run(capsys, "kron", "2,1 / 2,1 / 3")
    assert code == 0 and out.splitlines()[-1] == "1"


def test_kron_parse_error(capsys):
    code, _, err = run(capsys, "kron", "2,1 / nope / 3")
    assert code == 1 and "error" in err


def test_bound_all(capsys):
    code, out, _ = run(
        capsys, "bound", "murnaghan", "8,5,2 / 6,5,2,2 / 4,4,3,3,1", "--all"
    )
    assert code == 0
    values = dict(line.split(" = ") for line in out.splitlines() if " = " in line)
    assert values["D1"] == "6"
    assert values["DB"] == "5"
    assert values["Dm"] == "5"


def test_bound_squares(capsys):
    code, out, _ = run(capsys, "bound", "squares", "8,2 / 6,4 / 5,4,1")
    assert code == 0 and "D2 = 1" in out


def test_bound_hyperoct(capsys):
    code, out, _ = run(
        capsys, "bound", "hyperoct", "3,1;1 / 2,2;1 / 2,1,1;2,1,1"
    )
    assert code == 0
    value = int(out.split("=")[1])
    assert value >= 0


def test_dreal(capsys):
    code, out, _ = run(capsys, "dreal", "squares", "20,5 / 13,12 / 11,10,3,1")
    assert code == 0 and "d_real = 1" in out
    code, out, _ = run(capsys, "dreal", "murnaghan", "7,6 / 6,5,2 / 7,3,2,1")
    assert code == 0 and "d_real = 3" in out


def test_dreal_custom_direction(capsys):
    code, out, _ = run(
        capsys,
        "dreal", "murnaghan", "2,1 / 2,1 / 2,1",
        "--direction", "1,1 / 1,1 / 2", "--horizon", "4",
    )
    assert code == 0 and "empirical" in out


def test_plethysm(capsys):
    code, out, _ = run(capsys, "plethysm", "2 / 2,1 / 4,2")
    assert code == 0 and out.strip() == "1"
    code, out, _ = run(capsys, "plethysm", "2 / 1,1 / 4")
    assert code == 0 and out.strip() == "0"


def test_hyperoct(capsys):
    code, out, _ = run(capsys, "hyperoct", "2;2 / 2;2 / 2;2")
    assert code == 0 and out.strip() == "1"


def test_table_markdown(capsys):
    code, out, _ = run(capsys, "table", "3.6.1", "--rows", "2,8,9")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("| triple | D1 | Dm | Dreal |")
    assert len(lines) == 5


def test_table_csv_header(capsys):
    code, out, _ = run(capsys, "table", "3.6.2", "--rows", "10,11", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "triple,D2,Dreal"
    assert lines[1] == '"8,2 / 6,4 / 5,4,1",1,1'


def test_table_json_round_trip(capsys):
    code, out, _ = run(
        capsys, "table", "3.6.1", "--rows", "1,8", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload == json.loads(json.dumps(payload))
    assert payload["status"] == "ok"
    row1 = payload["rows"][0]["cells"]
    assert row1["DBOR2"]["status"] == "mismatch-known"
    assert row1["DV"]["provenance"] == "fixture"
    assert row1["D1"] == {
        "expected": 6, "computed": 6, "provenance": "computed", "status": "match"
    }


def test_table_unknown_id(capsys):
    code, _, err = run(capsys, "table", "nope")
    assert code == 2 and "unknown table id" in err


def test_thread_count_env(capsys, monkeypatch):
    monkeypatch.setenv("KRONSTAB_THREADS", "2")
    code, out, _ = run(capsys, "table", "3.6.2", "--rows", "10,11", "--format", "csv")
    assert code == 0
    assert out.splitlines()[1].startswith('"8,2')
