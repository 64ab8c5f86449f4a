import json

import pytest

from urdu_index.cli import fixture_corpus_dir, run
from urdu_index.index import read_index


@pytest.fixture
def built(tmp_path, capsys):
    out = tmp_path / "idx.v1"
    assert run(["build", "--corpus", str(fixture_corpus_dir()), "--out", str(out)]) == 0
    size = int(capsys.readouterr().out.strip())
    assert size == out.stat().st_size
    return out


def test_build_is_byte_identical(tmp_path, built, capsys):
    again = tmp_path / "again.v1"
    assert run(["build", "--corpus", str(fixture_corpus_dir()), "--out", str(again)]) == 0
    assert again.read_bytes() == built.read_bytes()


def test_build_defaults(built):
    flags = read_index(built).flags
    assert flags.stop_words_removed and flags.ordered and flags.stemmed_layer


def test_build_variant_flags(tmp_path, capsys):
    out = tmp_path / "v.v1"
    argv = ["build", "--corpus", str(fixture_corpus_dir()), "--out", str(out),
            "--no-remove-stops", "--no-ordered", "--no-stem-layer", "--json"]
    assert run(argv) == 0
    info = json.loads(capsys.readouterr().out)
    assert info["bytes"] == out.stat().st_size
    flags = read_index(out).flags
    assert not (flags.stop_words_removed or flags.ordered or flags.stemmed_layer)


def test_search_expand_json(built, capsys):
    assert run(["search", "--index", str(built), "--query", "جنت", "--expand", "--json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert set(out) >= {"query", "terms", "records", "record_count"}
    assert out["terms"] == ["جنت"]
    assert out["record_count"] == 10 == len(out["records"])
    rec = out["records"][0]
    assert set(rec) == {"doc", "source_name", "positions_by_term"}
    assert rec["source_name"].startswith("doc_")


def test_search_text(built, capsys):
    assert run(["search", "--index", str(built), "--query", "لاہور"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "record_count: 1"
    assert lines[1].startswith("0\tdoc_000.txt\t")


def test_search_without_query_is_usage_error(built, capsys):
    assert run(["search", "--index", str(built)]) == 1
    err = capsys.readouterr()
    assert "usage" in err.err and err.out == ""


def test_unknown_flag(capsys):
    assert run(["build", "--bogus"]) == 1


def test_no_subcommand(capsys):
    assert run([]) == 1


def test_stop_word_query_is_data_error(built, capsys):
    assert run(["search", "--index", str(built), "--query", "وہ"]) == 2
    err = capsys.readouterr()
    assert err.out == "" and "no searchable terms" in err.err


def test_malformed_index_is_data_error(tmp_path, capsys):
    bad = tmp_path / "bad.v1"
    bad.write_text("nonsense\n", encoding="utf-8")
    assert run(["stats", "--index", str(bad)]) == 2


def test_missing_corpus_is_data_error(tmp_path, capsys):
    assert run(["build", "--corpus", str(tmp_path / "nope"), "--out", str(tmp_path / "x")]) == 2


def test_stats(built, capsys):
    assert run(["stats", "--index", str(built), "--json"]) == 0
    stats = json.loads(capsys.readouterr().out)
    idx = read_index(built)
    assert stats["terms"] == len(idx)
    assert stats["postings"] == idx.posting_count
    assert stats["bytes"] == built.stat().st_size
    assert stats["ordered"] is True


def test_bench_json(tmp_path, capsys):
    out = tmp_path / "report.json"
    assert run(["bench", "--reps", "1000", "--format", "json", "--out", str(out)]) == 0
    report = json.loads(out.read_text(encoding="utf-8"))
    assert report["size_without_stops_bytes"] < report["size_with_stops_bytes"]
    assert len(report["timing_rows"]) == 4 and len(report["recall_rows"]) == 5


def test_bench_probes_file(tmp_path, capsys):
    probes = tmp_path / "probes.txt"
    probes.write_text("# probes\nجنت\nلاہور\n", encoding="utf-8")
    assert run(["bench", "--corpus", str(fixture_corpus_dir()), "--reps", "1000",
                "--probes", str(probes), "--format", "csv"]) == 0
    text = capsys.readouterr().out
    assert "لاہور,1,1" in text


def test_bench_low_reps_is_usage_error(capsys):
    assert run(["bench", "--reps", "10"]) == 1


def test_custom_stopwords(tmp_path, capsys):
    stops = tmp_path / "stops.txt"
    stops.write_text("جنت\n", encoding="utf-8")
    out = tmp_path / "i.v1"
    assert run(["build", "--corpus", str(fixture_corpus_dir()), "--out", str(out),
                "--stopwords", str(stops)]) == 0
    idx = read_index(out)
    assert idx.find("جنت") is None and idx.find("وہ") is not None
