import json

import pytest

from apd.cli import main
from apd.matrices import hilbert, load_matrix


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_gen_json_and_csv(tmp_path, capsys):
    path = tmp_path / "h.json"
    assert main(["gen", "--family", "hilbert", "--n", "3", "--out", str(path)]) == 0
    assert load_matrix(path) == hilbert(3)
    code, out, _ = run(capsys, "gen", "--family", "circulant", "--n", "3", "--format", "csv")
    assert code == 0
    assert out == "1,2,3\n2,3,1\n3,1,2\n"


def test_gen_shifted_with_symbolic_shift(capsys):
    code, out, _ = run(capsys, "gen", "--family", "shifted", "--n", "2", "--d", "n", "--r", "1")
    assert json.loads(out)["entries"] == [["1", "2"], ["3", "4"]]


def test_compute(capsys):
    code, out, _ = run(capsys, "compute", "--family", "identity", "--n", "4", "--m", "3")
    assert (code, out) == (0, "24\n")
    code, out, _ = run(capsys, "compute", "--family", "hilbert", "--n", "3", "--m", "2", "--all")
    assert out == "1\t0\n2\t1/120\n"


def test_compute_from_matrix_file_and_histogram(tmp_path, capsys):
    mpath = tmp_path / "m.json"
    mpath.write_text('{"n": 2, "entries": [["1", "1/2"], ["1/2", "1/3"]]}')
    hpath = tmp_path / "h.json"
    code, out, _ = run(capsys, "compute", "--matrix", str(mpath), "--m", "1",
                       "--histogram", str(hpath), "--threads", "2")
    assert (code, out) == (0, "1/3\n")
    doc = json.loads(hpath.read_text())
    assert doc == {"n": 2, "buckets": [
        {"value": "1", "even": "0", "odd": "1"},
        {"value": "4/3", "even": "1", "odd": "0"},
    ]}


def test_m1_outcomes(capsys):
    code, out, _ = run(capsys, "m1", "--family", "mult", "--n", "4", "--m-cap", "10")
    assert code == 0
    doc = json.loads(out)
    assert (doc["m1"], doc["value"], doc["outcome"]) == ("6", "8640", "found")

    code, out, _ = run(capsys, "m1", "--family", "shifted", "--d", "1", "--r", "1", "--n", "4")
    assert code == 0 and json.loads(out)["m1"] == "inf"

    code, out, _ = run(capsys, "m1", "--family", "mult", "--n", "4", "--m-cap", "3")
    assert code == 3 and json.loads(out)["outcome"] == "inconclusive"


def test_verify_writes_reports(tmp_path, capsys):
    jpath, cpath = tmp_path / "r.json", tmp_path / "r.csv"
    code, _, err = run(capsys, "verify", "--family", "pascal", "--n-min", "2", "--n-max", "5",
                       "--json", str(jpath), "--csv", str(cpath))
    assert code == 0
    assert "BAD" not in err
    doc = json.loads(jpath.read_text())
    rows = doc["reports"][0]["rows"]
    assert [r["value_computed"] for r in rows] == ["1", "2", "6", "24"]
    assert doc["reports"][0]["command_line"] == "apd verify --family pascal --n-min 2 --n-max 5"
    assert cpath.read_text().count("\n") == 5


def test_verify_inconclusive_exit(capsys):
    code, _, _ = run(capsys, "verify", "--family", "mult", "--n-min", "4", "--n-max", "4",
                     "--m-cap", "3")
    assert code == 3


def test_domain_and_usage_errors(capsys, tmp_path):
    assert run(capsys, "verify", "--family", "mult", "--r", "2", "--n-min", "2", "--n-max", "3")[0] == 2
    assert run(capsys, "m1", "--family", "identity", "--n", "13")[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text('{"n": 1, "entries": [["1/0"]]}')
    assert run(capsys, "m1", "--matrix", str(bad))[0] == 2
    with pytest.raises(SystemExit) as info:
        main(["m1", "--n", "3"])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main(["gen", "--family", "shifted", "--n", "3", "--d", "x"])
    assert info.value.code == 2


def test_max_order_override(capsys):
    code, _, _ = run(capsys, "m1", "--family", "identity", "--n", "5", "--max-order", "4")
    assert code == 2


def test_pte(tmp_path, capsys):
    path = tmp_path / "p.json"
    assert main(["pte", "--family", "identity", "--n", "4", "--out", str(path)]) == 0
    doc = json.loads(path.read_text())
    assert doc["pte_degree"] == 2
    assert sum(int(e["count"]) for e in doc["even"]) == 12
    code, out, _ = run(capsys, "pte", "--family", "shifted", "--d", "2", "--r", "1", "--n", "3",
                       "--k-cap", "5")
    assert json.loads(out)["pte_degree"] == ">=5"


def test_verify_all_smoke_env_threads(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("APD_THREADS", "2")
    path = tmp_path / "s.json"
    code, _, _ = run(capsys, "verify-all", "--profile", "smoke", "--json", str(path))
    assert code == 0
    doc = json.loads(path.read_text())
    assert doc["profile"] == "smoke"
    assert {r["threads_used"] for rep in doc["reports"] for r in rep["rows"]} == {2}
