import csv
import io
import json

from plumbhf import analyze, survey_all_minus_two, survey_brieskorn
from plumbhf.report import (
    ResultCache,
    brieskorn_row,
    report_to_csv,
    reverify_cache,
    rows_to_csv,
    s3_rows,
)
from support import e8


def test_analyze_report_fields():
    r = analyze(e8())
    assert r.det == 1
    assert r.negative_definite
    assert r.bad_vertices == (0,)
    assert r.is_homology_sphere
    assert r.vertex_count == 8
    assert r.initial_count == 256
    assert r.good_initial_count == 1
    assert not r.partial
    assert r.good_initials == (tuple([0] * 8),)
    assert r.elapsed_ms >= 0
    assert r.sequences is None
    obj = r.to_obj()
    assert obj["good_initial_count"] == 1
    assert "assumes_independent_generators" in obj
    json.dumps(obj)  # must be serializable as is


def test_analyze_emits_sequences_on_request():
    r = analyze(e8(), emit_sequences=True)
    assert r.sequences is not None
    seq = r.sequences[0]
    assert seq["states"][0] == [0] * 8
    assert seq["moved"] == []


def test_analyze_early_stop_sets_partial():
    r = analyze(e8(), early_stop=1)
    assert r.good_initial_count == 1
    assert r.partial
    assert r.early_stop == 1


def test_survey_brieskorn_small():
    rows = survey_brieskorn(max_a=7, rays=3)
    by_params = {r.params: r for r in rows}
    assert by_params[(2, 3, 5)].verdict == "trivial-rank"
    assert by_params[(2, 3, 5)].count == 1
    assert by_params[(2, 3, 7)].verdict == "nontrivial"
    assert all(r.verdict == "nontrivial" for p, r in by_params.items() if p != (2, 3, 5))
    # pairwise-coprime tuples only
    assert (2, 4, 5) not in by_params
    assert (2, 4, 7) not in by_params


def test_survey_all_minus_two_exact():
    rows = survey_all_minus_two(max_p=12, rays=3)
    solutions = [r.params for r in rows if r.verdict == "solution"]
    assert solutions == [(1, 2, 4)]
    for rays in (4, 5, 6):
        rows = survey_all_minus_two(max_p=12, rays=rays)
        assert all(r.verdict == "non-solution" for r in rows)


def test_s3_rows_all_pass_small():
    rows = s3_rows(8)
    assert rows
    for row in rows:
        assert row.all_pass()
        assert row.count == 1
        assert row.central_moves == row.quadruple[0] + row.quadruple[2] - 1


def test_cache_reuse_and_append(tmp_path):
    path = tmp_path / "cache.jsonl"
    cache = ResultCache(path)
    rows1 = survey_brieskorn(max_a=7, rays=3, cache=cache)
    lines1 = path.read_text().splitlines()
    assert len(lines1) == len(rows1)

    # a fresh cache object reads the file back and prevents new appends
    cache2 = ResultCache(path)
    rows2 = survey_brieskorn(max_a=7, rays=3, cache=cache2)
    assert [r.to_obj() for r in rows2] == [r.to_obj() for r in rows1]
    assert path.read_text().splitlines() == lines1

    # a different early_stop is a different cache key
    rows3 = survey_brieskorn(max_a=7, rays=3, early_stop=None, cache=cache2)
    lines3 = path.read_text().splitlines()
    assert len(lines3) == 2 * len(rows1)
    assert [r.params for r in rows3] == [r.params for r in rows1]


def test_cache_reverify_flags_tampering(tmp_path):
    path = tmp_path / "cache.jsonl"
    cache = ResultCache(path)
    rows = survey_brieskorn(max_a=7, rays=3, cache=cache)
    used = [r.graph_hash for r in rows if r.graph_hash]
    assert reverify_cache(cache, used, sample=len(used)) == []

    # corrupt one stored count and reload
    records = [json.loads(line) for line in path.read_text().splitlines()]
    records[0]["good_initial_count"] += 5
    path.write_text("\n".join(json.dumps(r) for r in records) + "\n")
    tampered = ResultCache(path)
    problems = reverify_cache(tampered, used, sample=len(used))
    assert len(problems) == 1
    assert "mismatch" in problems[0]


def test_csv_and_json_rows_carry_identical_data():
    rows = survey_brieskorn(max_a=7, rays=3)
    objs = [r.to_obj() for r in rows]
    parsed = list(csv.DictReader(io.StringIO(rows_to_csv(rows))))
    assert len(parsed) == len(objs)
    for obj, line in zip(objs, parsed):
        assert line["params"] == ";".join(str(x) for x in obj["params"])
        assert line["verdict"] == obj["verdict"]
        assert line["count"] == ("" if obj["count"] is None else str(obj["count"]))
        assert line["partial"] == ("true" if obj["partial"] else "false")
        assert line["graph_hash"] == (obj["graph_hash"] or "")


def test_report_csv_matches_json_fields():
    r = analyze(e8())
    obj = r.to_obj()
    parsed = list(csv.DictReader(io.StringIO(report_to_csv(r))))
    assert len(parsed) == 1
    line = parsed[0]
    assert line["det"] == str(obj["det"])
    assert line["graph_hash"] == obj["graph_hash"]
    assert line["good_initial_count"] == str(obj["good_initial_count"])
    assert line["bad_vertices"] == ";".join(str(v) for v in obj["bad_vertices"])
    assert line["negative_definite"] == "true"


def test_brieskorn_row_skips_invalid_tuples():
    row = brieskorn_row((2, 4, 5))
    assert row.verdict == "skipped"
    assert "NotCoprime" in row.reason
