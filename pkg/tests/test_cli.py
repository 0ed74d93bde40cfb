import io
import json
import os
import shutil
import subprocess
import sys

import pytest

from spheredeg import cli
from spheredeg import io as sio
from spheredeg.filtration import from_function
from spheredeg.reports import VerificationReport
from spheredeg.simplicial import build_complex
from spheredeg.surgery import DiskMap

FIX = os.path.join(os.path.dirname(__file__), "fixtures")


def fx(name):
    return os.path.join(FIX, name)


def run(*argv):
    buf = io.StringIO()
    report = cli.run(list(argv), stdout=buf)
    return report, buf.getvalue()


def test_enumerate_to_file(tmp_path):
    out = tmp_path / "census.json"
    report, _ = run("enumerate", "--n", "1", "--max-degree", "1", "--out", str(out))
    assert report.exit_status == 0
    doc = json.loads(out.read_text())
    # one type: the genus-0 basepoint with a single pillar edge is not valid
    assert doc["summary"] == {"n": 1, "d": 1, "count": 1}
    assert report.artifacts == [str(out)]


def test_enumerate_csv_and_dot():
    _, csv = run("enumerate", "--n", "2", "--d", "1", "--format", "csv")
    lines = csv.strip().splitlines()
    assert lines[0] == "n,d,dim,degree,count"
    assert sum(int(r.split(",")[-1]) for r in lines[1:]) == 7
    _, dot = run("enumerate", "--n", "2", "--d", "0", "--format", "dot")
    assert dot.count("graph T") == 2 and "doublecircle" in dot


def test_verify_collapse_lemma():
    report, text = run("verify", "--suite", "collapse-lemma", "--n-max", "4", "--d-max", "3")
    assert report.exit_status == 0
    doc = json.loads(text)
    assert doc["counterexamples"] == [] and doc["passed"] is True
    assert "duration" not in doc and "seconds" in report.summary


def test_verify_failure_exits_nonzero(monkeypatch):
    bad = VerificationReport("collapse-lemma", 1, 1, [{"graph": "witness"}])
    monkeypatch.setattr(cli, "verify_suite", lambda *a, **k: bad)
    report, text = run("verify", "--suite", "collapse-lemma", "--n-max", "1", "--d-max", "0")
    assert report.exit_status == 1
    assert json.loads(text)["counterexamples"] == [{"graph": "witness"}]


def test_homology_rp2():
    report, text = run("homology", "--in", fx("rp2.json"))
    assert report.exit_status == 0
    dims = json.loads(text)["dims"]
    assert [(g["rank"], g["torsion"]) for g in dims] == [(0, []), (0, [2]), (0, [])]


def test_surgery_interval(tmp_path):
    trace = tmp_path / "trace.json"
    report, text = run("surgery", "--filtration", fx("interval_filtration.json"),
                       "--disk-map", fx("interval_diskmap.json"), "--d", "0", "--trace", str(trace))
    assert report.exit_status == 0
    doc = json.loads(text)
    assert doc["trace"] == [{"step": 0, "measure": [1, 0, 1], "omega": ["p1"], "image": ["b"]}]
    assert json.loads(trace.read_text()) == doc["trace"]
    assert {v for _, v in doc["disk_map"]["map"]} <= {"a", "c"}
    assert report.summary["final_max_degree"] == 0


def test_surgery_filler_failure(tmp_path):
    F = from_function(build_complex([["a", "b"], ["b", "c"]]), lambda s: 1 if "b" in s else 0)
    disk = build_complex([["p0", "p1"], ["p1", "p2"]])
    f = DiskMap(disk, build_complex([["p0"], ["p2"]]), F, {"p0": "a", "p1": "b", "p2": "c"})
    (tmp_path / "F.json").write_text(sio.dumps(sio.filtration_to_dict(F)))
    (tmp_path / "f.json").write_text(sio.dumps(sio.diskmap_to_dict(f)))
    report, text = run("surgery", "--filtration", str(tmp_path / "F.json"),
                       "--disk-map", str(tmp_path / "f.json"), "--d", "0")
    assert report.exit_status == 1
    payload = json.loads(text)
    assert payload["error"] == "filler-failure"
    assert payload["sphere"] == {"facets": [["p0"], ["p2"]]}
    assert payload["trace"][0]["omega"] == ["p1"]


def test_usage_errors():
    assert run("enumerate", "--n", "1")[0].exit_status == 2
    assert run("bogus")[0].exit_status == 2
    assert run("enumerate", "--n", "0", "--d", "1")[0].exit_status == 2


def test_schema_error_has_location(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"facets": [["a", "b"], 3]}')
    report, _ = run("homology", "--in", str(bad))
    assert report.exit_status == 2
    assert "facets" in report.summary["error"]
    bad.write_text("{not json")
    report, _ = run("homology", "--in", str(bad))
    assert report.exit_status == 2 and "bad.json" in report.summary["error"]


def test_missing_file():
    assert run("homology", "--in", "/nonexistent/x.json")[0].exit_status == 2


def test_resource_cap(monkeypatch):
    monkeypatch.delenv("SPHEREDEG_ALLOW_LARGE", raising=False)
    report, _ = run("enumerate", "--n", "10", "--d", "3")
    assert report.exit_status == 3
    report, _ = run("enumerate", "--n", "13", "--d", "0", "--allow-large")
    assert report.exit_status == 0


FIXTURES = sorted(f for f in os.listdir(FIX) if f.endswith(".json") and f != "interval_diskmap.json")


@pytest.mark.parametrize("name", FIXTURES)
def test_export_round_trip_is_identity(name):
    report, text = run("export", "--in", fx(name), "--format", "json")
    assert report.exit_status == 0
    with open(fx(name)) as fh:
        assert text == fh.read()


def test_export_census_round_trip(tmp_path):
    out = tmp_path / "c.json"
    run("enumerate", "--n", "3", "--d", "2", "--out", str(out))
    _, again = run("export", "--in", str(out), "--format", "json")
    assert again == out.read_text()
    _, csv = run("export", "--in", str(out), "--format", "csv")
    _, direct = run("enumerate", "--n", "3", "--d", "2", "--format", "csv")
    assert csv == direct


def test_export_graph_dot():
    report, dot = run("export", "--in", fx("star_graph.json"), "--format", "dot")
    assert report.exit_status == 0
    assert dot.startswith("graph G") and "g=2" in dot


def test_export_refuses_impossible_formats():
    assert run("export", "--in", fx("rp2.json"), "--format", "csv")[0].exit_status == 2


def test_main_writes_summary_to_stderr(capsys):
    status = cli.main(["enumerate", "--n", "2", "--d", "0"])
    captured = capsys.readouterr()
    assert status == 0
    summary = json.loads(captured.err)
    assert summary["count"] == 2 and summary["exit"] == 0
    assert json.loads(captured.out)["summary"]["count"] == 2


@pytest.mark.skipif(shutil.which("spheredeg") is None, reason="console script not installed")
def test_console_script(tmp_path):
    out = tmp_path / "h.json"
    proc = subprocess.run(["spheredeg", "homology", "--in", fx("torus.json"), "--out", str(out)],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(out.read_text())["dims"][2]["rank"] == 1


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "spheredeg", "enumerate", "--n", "1", "--d", "0"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["summary"]["count"] == 1
