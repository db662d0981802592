import json
import subprocess
import sys

import pytest

from monogen.cli import dumps, run

GOLDEN = [["0", "0", "0", "1", "0"], ["0", "0", "1", "-1", "0"], ["0", "0", "1", "0", "-1"],
          ["0", "0", "1", "1", "-1"], ["0", "0", "2", "0", "-1"], ["0", "0", "2", "1", "-1"]]


def test_analyze_gaussian_json(capsys):
    code = run(["analyze", "--cubic", "-1,-2,1", "--d", "1", "--json", "--bound", "1000"])
    out = capsys.readouterr().out
    doc = json.loads(out)
    assert doc["generators"] == GOLDEN
    assert doc["completeness"] == "bounded(1000)"
    assert code == 2
    assert dumps(json.loads(out)) == out


def test_analyze_d_list_sorted(capsys):
    assert run(["analyze", "--cubic", "-1,-2,1", "--d-list", "5,2", "--bound", "300"]) == 2
    docs = json.loads(capsys.readouterr().out)
    assert [d["d"] for d in docs] == ["2", "5"]
    assert all(d["generators"] == [] for d in docs)


@pytest.mark.parametrize(
    "argv",
    [
        ["analyze", "--cubic", "-1,-2,1", "--d", "4"],
        ["analyze", "--cubic", "-1,-2", "--d", "1"],
        ["analyze", "--cubic", "0,0,-1", "--d", "1"],
        ["analyze", "--cubic", "-1,-2,1", "--d", "x"],
        ["analyze", "--cubic", "-1,-2,1", "--d", "1", "--certified", "/nonexistent/file"],
        ["thue", "--form", "1,2,1,0", "--rhs-max", "1"],
        ["nope"],
        [],
    ],
)
def test_input_errors_exit_1(argv, capsys):
    assert run(argv) == 1
    assert "error" in capsys.readouterr().err


def test_thue_text_output(capsys):
    assert run(["thue", "--form", "1,-14,24,1", "--rhs-max", "1", "--bound", "1000"]) == 2
    lines = capsys.readouterr().out.splitlines()
    assert lines[0].startswith("#form 1 -14 24 1 sha256:")
    assert "1 12 1" in lines
    assert "1 -7 172" in lines


def test_thue_output_feeds_certified(tmp_path, capsys):
    path = tmp_path / "shifted.txt"
    assert run(["thue", "--form", "1,2,-1,-1", "--rhs-max", "1", "--bound", "500", "--out", str(path)]) == 2
    code = run(["analyze", "--cubic", "-1,-2,1", "--d", "2", "--certified", str(path)])
    doc = json.loads(capsys.readouterr().out)
    assert code == 0
    assert doc["completeness"] == "certified"
    assert doc["generators"] == []


def test_out_file(tmp_path, capsys):
    path = tmp_path / "report.json"
    run(["analyze", "--cubic", "-1,-2,1", "--d", "1", "--bound", "500", "--out", str(path)])
    assert capsys.readouterr().out == ""
    text = path.read_text()
    assert dumps(json.loads(text)) == text


def test_family_command(capsys):
    assert run(["family", "--t0", "2", "--t-max", "3", "--d-list", "2,5", "--bound", "200"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["verdict"] == "NonMonogenic"
    assert len(doc["specializations"]) == 4
    assert all(s["generators"] == [] and s["completeness"] == "certified" for s in doc["specializations"])


def test_family_inconclusive_exit_2(capsys):
    assert run(["family", "--t0", "0"]) == 2
    assert json.loads(capsys.readouterr().out)["verdict"] == "Inconclusive"


def test_build_f(capsys):
    assert run(["build-f", "--cubic", "-1,-2,1", "--d", "1"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 105
    assert run(["build-f", "--cubic", "-1,-2,1", "--d", "1", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["vars"] == ["x1", "x2", "y0", "y1", "y2"]
    assert run(["build-f", "--cubic", "-1,-2,1"]) == 1


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "monogen", "thue", "--form", "1,0,0,2", "--rhs-max", "0", "--bound", "5"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 2
    assert proc.stdout.splitlines()[-1] == "0 0 0"


def test_threaded_sweep_matches_serial(monkeypatch, capsys):
    argv = ["analyze", "--cubic", "-1,-2,1", "--d-list", "1,2,3", "--bound", "300"]
    run(argv)
    serial = [{k: v for k, v in d.items() if k != "seconds"} for d in json.loads(capsys.readouterr().out)]
    monkeypatch.setenv("MONOGEN_THREADS", "3")
    run(argv)
    pooled = [{k: v for k, v in d.items() if k != "seconds"} for d in json.loads(capsys.readouterr().out)]
    assert pooled == serial
