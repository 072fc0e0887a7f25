import csv
import io
import json

import pytest

from plumbhf import build_graph, write_graph_file
from plumbhf.cli import main
from support import chain, e8


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def graph_file(tmp_path, graph, name="graph.json"):
    path = tmp_path / name
    write_graph_file(graph, path)
    return str(path)


def test_analyze_json(tmp_path, capsys):
    path = graph_file(tmp_path, e8())
    code, out, _ = run(capsys, "analyze", path)
    assert code == 0
    obj = json.loads(out)
    assert obj["det"] == 1
    assert obj["good_initial_count"] == 1
    assert obj["negative_definite"] is True
    assert obj["name"] == "e8"


def test_analyze_csv_same_data(tmp_path, capsys):
    path = graph_file(tmp_path, e8())
    code, out, _ = run(capsys, "analyze", path)
    obj = json.loads(out)
    code, out, _ = run(capsys, "analyze", path, "--format", "csv")
    assert code == 0
    line = next(csv.DictReader(io.StringIO(out)))
    for key in ("det", "good_initial_count", "initial_count", "vertex_count"):
        assert line[key] == str(obj[key])
    assert line["graph_hash"] == obj["graph_hash"]


def test_analyze_output_file(tmp_path, capsys):
    path = graph_file(tmp_path, e8())
    dest = tmp_path / "report.json"
    code, out, _ = run(capsys, "analyze", path, "--output", str(dest))
    assert code == 0
    assert out == ""
    assert json.loads(dest.read_text())["det"] == 1


def test_analyze_emit_sequences(tmp_path, capsys):
    path = graph_file(tmp_path, chain(-2, -2))
    code, out, _ = run(capsys, "analyze", path, "--emit-sequences")
    assert code == 0
    obj = json.loads(out)
    assert len(obj["sequences"]) == obj["good_initial_count"] == 3


def test_analyze_parse_error_exits_1(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"vertices": [{"id": 0, "weight": "x"}], "edges": []}')
    code, out, err = run(capsys, "analyze", str(bad))
    assert code == 1
    assert "ParseError" in err


def test_analyze_two_bad_vertices_exits_1(tmp_path, capsys):
    path = graph_file(tmp_path, chain(-2, -1, -2, -1, -2))
    code, out, err = run(capsys, "analyze", path)
    assert code == 1
    assert "TooManyBadVertices" in err


def test_brieskorn_poincare(capsys):
    code, out, _ = run(capsys, "brieskorn", "2", "3", "5")
    assert code == 0
    obj = json.loads(out)
    assert obj["verdict"] == "trivial-rank"
    assert obj["good_initial_count"] == 1
    assert obj["det"] == 1
    assert obj["vertex_count"] == 8


def test_brieskorn_nontrivial(capsys):
    code, out, _ = run(capsys, "brieskorn", "2", "3", "7", "--early-stop", "2")
    obj = json.loads(out)
    assert code == 0
    assert obj["verdict"] == "nontrivial"
    assert obj["good_initial_count"] == 2


def test_brieskorn_not_coprime_exits_1(capsys):
    code, out, err = run(capsys, "brieskorn", "2", "4", "5")
    assert code == 1
    assert "NotCoprime" in err


def test_survey_all_minus_two(capsys):
    code, out, _ = run(capsys, "survey", "--mode", "all-minus-two", "--max-p", "12")
    assert code == 0
    rows = json.loads(out)
    hits = [r["params"] for r in rows if r["verdict"] == "solution"]
    assert hits == [[1, 2, 4]]


def test_survey_brieskorn_with_cache(tmp_path, capsys):
    cache = tmp_path / "cache.jsonl"
    code, out, _ = run(capsys, "survey", "--max-a", "7", "--cache", str(cache))
    assert code == 0
    rows = json.loads(out)
    assert {tuple(r["params"]): r["verdict"] for r in rows}[(2, 3, 5)] == "trivial-rank"
    first = cache.read_text()
    assert first

    # rerun reuses the cache without growing it, and reverify agrees
    code, out, _ = run(
        capsys, "survey", "--max-a", "7", "--cache", str(cache), "--reverify-sample", "5"
    )
    assert code == 0
    assert json.loads(out) == rows
    assert cache.read_text() == first


def test_survey_cache_env_var(tmp_path, capsys, monkeypatch):
    env_cache = tmp_path / "env.jsonl"
    monkeypatch.setenv("PLUMB_HF_CACHE", str(env_cache))
    code, _, _ = run(capsys, "survey", "--max-a", "6")
    assert code == 0
    assert env_cache.exists()

    # an explicit flag wins over the environment
    flag_cache = tmp_path / "flag.jsonl"
    before = env_cache.read_text()
    code, _, _ = run(capsys, "survey", "--max-a", "6", "--cache", str(flag_cache))
    assert code == 0
    assert flag_cache.exists()
    assert env_cache.read_text() == before


def test_survey_no_cache_by_default(tmp_path, capsys, monkeypatch):
    monkeypatch.chdir(tmp_path)
    monkeypatch.delenv("PLUMB_HF_CACHE", raising=False)
    code, _, _ = run(capsys, "survey", "--max-a", "6")
    assert code == 0
    assert list(tmp_path.iterdir()) == []


def test_survey_csv_matches_json(capsys):
    code, json_out, _ = run(capsys, "survey", "--mode", "all-minus-two", "--max-p", "5")
    code, csv_out, _ = run(
        capsys, "survey", "--mode", "all-minus-two", "--max-p", "5", "--format", "csv"
    )
    rows = json.loads(json_out)
    lines = list(csv.DictReader(io.StringIO(csv_out)))
    assert len(rows) == len(lines)
    for obj, line in zip(rows, lines):
        assert line["params"] == ";".join(str(x) for x in obj["params"])
        assert line["verdict"] == obj["verdict"]


def test_s3_harness(capsys):
    code, out, _ = run(capsys, "s3", "--bound", "8")
    assert code == 0
    rows = json.loads(out)
    assert len(rows) == 4
    for row in rows:
        assert row["unique_good_initial"]
        assert row["reversal_is_good"]


def test_usage_errors_exit_1(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["analyze"])  # missing file argument
    assert exc.value.code == 1
    with pytest.raises(SystemExit) as exc:
        main(["survey", "--format", "xml"])
    assert exc.value.code == 1
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 1


def test_missing_file_exits_1(capsys):
    code, out, err = run(capsys, "analyze", "/nonexistent/graph.json")
    assert code == 1
    assert err


def test_module_entry_point():
    import subprocess
    import sys

    proc = subprocess.run(
        [sys.executable, "-m", "plumbhf", "brieskorn", "2", "3", "5", "--early-stop", "1"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["good_initial_count"] == 1
