import io
import json

import pytest

from kplanar.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_generate_then_verify(tmp_path):
    path = tmp_path / "d.json"
    svg = tmp_path / "d.svg"
    code, out, _ = call("generate", "--family", "c4free-2planar", "--rows", "6", "--cols", "6", "--wrap", "--out", str(path), "--svg", str(svg))
    assert code == 0
    assert json.loads(out)["schema_version"] == 1
    assert svg.read_text().startswith("<svg")
    code, out, _ = call("verify", "--in", str(path), "--checks", "c4,kplanar", "--expect-k", "2")
    rep = json.loads(out)
    assert code == 0 and rep["pass"]
    assert rep["checks"]["kplanar"]["local_crossing_number"] == 2


def test_verify_reports_triangle(tmp_path):
    path = tmp_path / "k3.json"
    path.write_text(json.dumps({
        "metric": None,
        "vertices": [{"id": 0, "x": "0", "y": "0"}, {"id": 1, "x": "1", "y": "0"}, {"id": 2, "x": "0", "y": "1"}],
        "edges": [{"u": 0, "v": 1, "bends": []}, {"u": 1, "v": 2, "bends": []}, {"u": 0, "v": 2, "bends": []}],
    }))
    code, out, _ = call("verify", "--in", str(path), "--checks", "c3")
    assert code == 1
    assert json.loads(out)["checks"]["c3"]["pass"] is False


def test_bounds_command():
    code, out, _ = call("bounds", "--k", "2", "--setting", "c4free", "--n", "1000", "--direction", "U")
    rep = json.loads(out)
    assert code == 0
    assert rep["constant"]["radicand"] == "190125/3136"
    assert float(rep["bound_decimal"]) < 3929
    code, out, _ = call("bounds", "--k", "k", "--setting", "girth5", "--format", "text")
    assert code == 0 and "sqrt(11163/1600)" in out


def test_table_command():
    code, out, _ = call("table", "--format", "text")
    assert code == 0 and "3.597n" in out
    code, out, _ = call("table", "--format", "json")
    assert json.loads(out)["schema_version"] == 1


def test_pipeline_commands(tmp_path):
    path = tmp_path / "d.json"
    call("generate", "--family", "girth5-1planar", "--rows", "3", "--cols", "6", "--wrap", "--out", str(path))
    code, out, _ = call("discharge", "--in", str(path), "--alpha", "5/6", "--density-formula", "3")
    rep = json.loads(out)
    assert code == 0 and rep["feasible"] and rep["charge_sum"]["pass"] and rep["density_formula"]["pass"]
    code, out, _ = call("audit", "--in", str(path), "--mu-class", "girth5", "--k", "1")
    assert code == 0 and json.loads(out)["pass"]
    csv = tmp_path / "t.csv"
    code, out, _ = call("sample", "--in", str(path), "--p", "1/2", "--trials", "2000", "--seed", "3", "--csv", str(csv))
    assert code == 0
    assert len(csv.read_text().splitlines()) == 2001


@pytest.mark.parametrize("argv", [
    ("frobnicate",),
    ("bounds", "--k", "two", "--setting", "c4free"),
    ("generate", "--family", "c4free-1planar", "--rows", "1", "--cols", "8", "--out", "x.json"),
    ("verify", "--in", "x.json", "--checks", "colour"),
])
def test_usage_errors(argv, tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    code, _, err = call(*argv)
    assert code == 2 and err


def test_bad_input_files(tmp_path):
    missing = tmp_path / "missing.json"
    assert call("verify", "--in", str(missing))[0] == 3
    broken = tmp_path / "broken.json"
    broken.write_text("{not json")
    assert call("discharge", "--in", str(broken), "--alpha", "1/2")[0] == 3
    degenerate = tmp_path / "deg.json"
    degenerate.write_text(json.dumps({
        "metric": None,
        "vertices": [{"id": 0, "x": "0", "y": "0"}, {"id": 1, "x": "0", "y": "0"}],
        "edges": [],
    }))
    assert call("verify", "--in", str(degenerate))[0] == 3
