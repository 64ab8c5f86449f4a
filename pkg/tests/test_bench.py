import csv
import io
import json

import pytest

from oracles import reference_size, synthetic_corpus_texts
from urdu_index.bench import (
    TABLE1_PROBES,
    TABLE2_PROBES,
    BenchReport,
    RecallRow,
    TimingRow,
    bench_latency,
    bench_recall,
    bench_sizes,
    emit_report,
    latency_variants,
    report_from_json,
    run_bench,
)
from urdu_index.index import BuildOptions, build_index
from urdu_index.ingest import Corpus

# Counted by scanning the fixture files for each word and its hand-listed
# plural and inflected forms.
FIXTURE_RECALL = {
    "جنت": (5, 10),
    "رات": (4, 8),
    "آسمان": (3, 7),
    "کافر": (3, 6),
    "کتاب": (4, 10),
}


def test_paper_probe_words():
    assert TABLE1_PROBES == ("گناہ", "نماز", "جنت", "رب")
    assert TABLE2_PROBES == ("جنت", "رات", "آسمان", "کافر", "کتاب")


class TestSizes:
    def test_direction(self, fixture_corpus):
        with_, without = bench_sizes(fixture_corpus)
        assert 0 < without < with_

    def test_no_stop_words_equal(self):
        corpus = Corpus.from_texts(["جنت رات", "کتاب"])
        with_, without = bench_sizes(corpus)
        assert with_ == without

    def test_matches_independent_size(self, fixture_corpus):
        with_, without = bench_sizes(fixture_corpus)
        ref_with = reference_size(build_index(fixture_corpus, BuildOptions(remove_stops=False)))
        ref_without = reference_size(build_index(fixture_corpus, BuildOptions(remove_stops=True)))
        assert (with_, without) == (ref_with, ref_without)
        assert without / with_ == pytest.approx(ref_without / ref_with, abs=0)


class TestLatency:
    def test_rejects_few_reps(self, fixture_corpus):
        with pytest.raises(ValueError):
            bench_latency(fixture_corpus, reps=999)

    def test_rejects_no_probes(self, fixture_corpus):
        with pytest.raises(ValueError):
            bench_latency(fixture_corpus, [], reps=1000)

    def test_rows(self, fixture_corpus):
        rows = bench_latency(fixture_corpus, reps=1000)
        assert [r.word for r in rows] == list(TABLE1_PROBES)
        for r in rows:
            assert r.repetitions == 1000
            assert min(r.with_stops_us, r.no_stops_unordered_us, r.no_stops_ordered_us) > 0
            assert r.note == ""

    def test_stop_word_probe_is_a_warning_row(self, fixture_corpus):
        (row,) = bench_latency(fixture_corpus, ["وہ"], reps=1000)
        assert "stop word" in row.note

    def test_variants(self, fixture_corpus):
        a, b, c = latency_variants(fixture_corpus)
        assert (a.flags.stop_words_removed, a.flags.ordered) == (False, False)
        assert (b.flags.stop_words_removed, b.flags.ordered) == (True, False)
        assert (c.flags.stop_words_removed, c.flags.ordered) == (True, True)

    def test_one_term_index_no_advantage(self):
        corpus = Corpus.from_texts(["جنت"])
        (row,) = bench_latency(corpus, ["جنت"], reps=1000)
        times = [row.with_stops_us, row.no_stops_unordered_us, row.no_stops_ordered_us]
        # Generous bound: every strategy is a handful of operations here.
        assert max(times) < 20 * min(times)
        assert max(times) < 100

    def test_ordered_faster_at_thousand_terms(self):
        texts = synthetic_corpus_texts(2000, TABLE1_PROBES, seed=5)
        rows = bench_latency(Corpus.from_texts(texts), reps=2000)
        for r in rows:
            assert r.no_stops_ordered_us <= r.no_stops_unordered_us, r


class TestRecall:
    def test_fixture_values(self, fixture_corpus):
        rows = bench_recall(fixture_corpus)
        assert {r.word: (r.records_exact, r.records_stemmed) for r in rows} == FIXTURE_RECALL

    def test_monotone_for_all_vocabulary(self, fixture_corpus, fixture_index):
        rows = bench_recall(fixture_corpus, fixture_index.terms)
        assert all(r.records_stemmed >= r.records_exact >= 1 for r in rows)

    def test_stop_word_probe(self, fixture_corpus):
        (row,) = bench_recall(fixture_corpus, ["وہ"])
        assert row.records_exact == 0

    def test_punctuation_probe(self, fixture_corpus):
        assert bench_recall(fixture_corpus, ["۔"]) == [RecallRow("۔", 0, 0)]


def _report():
    return BenchReport(
        100,
        90,
        [TimingRow("رب", 1.38, 0.79, 0.52, 1000)],
        [RecallRow("جنت", 41, 59)],
        {"python": "x"},
    )


class TestReport:
    def test_empty_csv_is_headers_only(self):
        text = emit_report(BenchReport(1, 1), "csv")
        rows = list(csv.reader(io.StringIO(text)))
        assert rows[0] == ["word", "with_stops_us", "no_stops_unordered_us", "no_stops_ordered_us", "repetitions", "note"]
        assert rows[1] == []
        assert rows[2] == ["word", "records_exact", "records_stemmed"]

    def test_csv_rows(self):
        rows = list(csv.reader(io.StringIO(emit_report(_report(), "csv"))))
        assert rows[1] == ["رب", "1.38", "0.79", "0.52", "1000", ""]
        assert rows[4] == ["جنت", "41", "59"]

    def test_json_round_trip(self):
        r = _report()
        assert report_from_json(emit_report(r, "json")) == r
        assert json.loads(emit_report(r, "json"))["size_with_stops_bytes"] == 100

    def test_table_layout(self):
        text = emit_report(_report(), "table")
        header = text.splitlines()[1]
        assert [h.strip() for h in header.split("|")] == [
            "Word",
            "With stop words",
            "Without stop words and unordered",
            "Without stop words and ordered",
        ]
        assert "Records with stemming rules" in text

    def test_unknown_format(self):
        with pytest.raises(ValueError):
            emit_report(_report(), "xml")

    def test_deterministic_except_timing(self, fixture_corpus):
        a = run_bench(fixture_corpus, reps=1000)
        b = run_bench(fixture_corpus, reps=1000)
        assert a.recall_rows == b.recall_rows
        assert (a.size_with_stops_bytes, a.size_without_stops_bytes) == (
            b.size_with_stops_bytes,
            b.size_without_stops_bytes,
        )
        assert [r.word for r in a.timing_rows] == [r.word for r in b.timing_rows]
