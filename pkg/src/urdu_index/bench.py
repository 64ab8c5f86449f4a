"""Desk-scale versions of the three indexing experiments.

* index size with and without stop words,
* lookup latency for the with-stops, stopless-unordered and
  stopless-ordered indexes,
* records retrieved with and without stem expansion.

Timings are means over many repetitions of a lookup against an index that
is already in memory, after an untimed warm-up.
"""

from __future__ import annotations

import csv
import io
import json
import logging
import platform
import sys
import time
from dataclasses import asdict, dataclass, field

from .analysis import normalize
from .index import BuildOptions, build_index, serialize_index
from .ingest import Corpus
from .search import Query, lookup, search

__all__ = [
    "TABLE1_PROBES",
    "TABLE2_PROBES",
    "TimingRow",
    "RecallRow",
    "BenchReport",
    "bench_sizes",
    "bench_latency",
    "bench_recall",
    "run_bench",
    "emit_report",
    "report_from_json",
]

log = logging.getLogger(__name__)

TABLE1_PROBES = ("گناہ", "نماز", "جنت", "رب")
TABLE2_PROBES = ("جنت", "رات", "آسمان", "کافر", "کتاب")

MIN_REPS = 1000
DEFAULT_REPS = 10_000
WARMUP = 100


@dataclass
class TimingRow:
    word: str
    with_stops_us: float
    no_stops_unordered_us: float
    no_stops_ordered_us: float
    repetitions: int
    note: str = ""


@dataclass
class RecallRow:
    word: str
    records_exact: int
    records_stemmed: int


@dataclass
class BenchReport:
    size_with_stops_bytes: int
    size_without_stops_bytes: int
    timing_rows: list[TimingRow] = field(default_factory=list)
    recall_rows: list[RecallRow] = field(default_factory=list)
    environment: dict[str, str] = field(default_factory=dict)


def bench_sizes(corpus: Corpus, options: BuildOptions | None = None) -> tuple[int, int]:
    """Serialized byte size of the index with stop words, then without."""
    options = options or BuildOptions()
    with_stops = serialize_index(build_index(corpus, options.variant(remove_stops=False)))
    without = serialize_index(build_index(corpus, options.variant(remove_stops=True)))
    return len(with_stops), len(without)


def _time_lookup(index, term: str, reps: int, warmup: int = WARMUP) -> float:
    for _ in range(warmup):
        lookup(index, term)
    clock = time.perf_counter_ns
    start = clock()
    for _ in range(reps):
        lookup(index, term)
    elapsed = clock() - start
    # Clock granularity can round a very fast loop to zero.
    return max(elapsed, 1) / reps / 1000.0


def latency_variants(corpus: Corpus, options: BuildOptions | None = None):
    """The three index variants compared by :func:`bench_latency`."""
    options = options or BuildOptions()
    return (
        build_index(corpus, options.variant(remove_stops=False, ordered=False)),
        build_index(corpus, options.variant(remove_stops=True, ordered=False)),
        build_index(corpus, options.variant(remove_stops=True, ordered=True)),
    )


def bench_latency(
    corpus: Corpus,
    probe_words=TABLE1_PROBES,
    reps: int = DEFAULT_REPS,
    options: BuildOptions | None = None,
) -> list[TimingRow]:
    """Mean microseconds per lookup of each probe in each index variant."""
    if reps < MIN_REPS:
        raise ValueError(f"reps must be at least {MIN_REPS}, got {reps}")
    probe_words = list(probe_words)
    if not probe_words:
        raise ValueError("no probe words given")
    options = options or BuildOptions()
    variants = latency_variants(corpus, options)
    rows = []
    for word in probe_words:
        term = normalize(word, options.cfg)
        note = ""
        if term in options.stops.words:
            note = "stop word: absent from stopless indexes"
            log.warning("probe %r is a stop word", word)
        elif variants[2].find(term) is None:
            note = "not in vocabulary"
        timings = [_time_lookup(idx, term, reps) for idx in variants]
        rows.append(TimingRow(word, *timings, repetitions=reps, note=note))
    return rows


def bench_recall(
    corpus: Corpus,
    probe_words=TABLE2_PROBES,
    options: BuildOptions | None = None,
) -> list[RecallRow]:
    """Records matched by each probe, exact versus stem-expanded."""
    probe_words = list(probe_words)
    if not probe_words:
        raise ValueError("no probe words given")
    options = options or BuildOptions()
    index = build_index(corpus, options.variant(remove_stops=True))
    rows = []
    for word in probe_words:
        term = normalize(word, options.cfg)
        if not term:
            rows.append(RecallRow(word, 0, 0))
            continue
        exact = search(index, Query(word, (term,), False), options.auxiliaries).record_count
        stemmed = search(index, Query(word, (term,), True), options.auxiliaries).record_count
        rows.append(RecallRow(word, exact, stemmed))
    return rows


def run_bench(
    corpus: Corpus,
    timing_probes=TABLE1_PROBES,
    recall_probes=TABLE2_PROBES,
    reps: int = DEFAULT_REPS,
    options: BuildOptions | None = None,
) -> BenchReport:
    options = options or BuildOptions()
    size_with, size_without = bench_sizes(corpus, options)
    timing = bench_latency(corpus, timing_probes, reps, options)
    recall = bench_recall(corpus, recall_probes, options)
    env = {
        "python": sys.version.split()[0],
        "implementation": platform.python_implementation(),
        "platform": platform.platform(),
        "documents": str(len(corpus)),
        "repetitions": str(reps),
        "warmup": str(WARMUP),
    }
    return BenchReport(size_with, size_without, timing, recall, env)


# -- rendering ------------------------------------------------------------------

_TIMING_FIELDS = ["word", "with_stops_us", "no_stops_unordered_us", "no_stops_ordered_us", "repetitions", "note"]
_RECALL_FIELDS = ["word", "records_exact", "records_stemmed"]
_SIZE_FIELDS = ["size_with_stops_bytes", "size_without_stops_bytes"]


def _as_csv(report: BenchReport) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(_TIMING_FIELDS)
    for r in report.timing_rows:
        w.writerow([getattr(r, f) for f in _TIMING_FIELDS])
    w.writerow([])
    w.writerow(_RECALL_FIELDS)
    for r in report.recall_rows:
        w.writerow([getattr(r, f) for f in _RECALL_FIELDS])
    w.writerow([])
    w.writerow(_SIZE_FIELDS)
    w.writerow([report.size_with_stops_bytes, report.size_without_stops_bytes])
    return buf.getvalue()


def _table(headers: list[str], rows: list[list[str]]) -> list[str]:
    widths = [max(len(h), *(len(r[i]) for r in rows)) if rows else len(h) for i, h in enumerate(headers)]
    fmt = " | ".join(f"{{:<{w}}}" for w in widths)
    out = [fmt.format(*headers), "-+-".join("-" * w for w in widths)]
    out.extend(fmt.format(*r) for r in rows)
    return out


def _as_text(report: BenchReport) -> str:
    reps = report.timing_rows[0].repetitions if report.timing_rows else 0
    lines = [f"Time execution comparison (mean microseconds per lookup, {reps} reps)"]
    lines += _table(
        [
            "Word",
            "With stop words",
            "Without stop words and unordered",
            "Without stop words and ordered",
        ],
        [
            [r.word, f"{r.with_stops_us:.3f}", f"{r.no_stops_unordered_us:.3f}", f"{r.no_stops_ordered_us:.3f}"]
            for r in report.timing_rows
        ],
    )
    notes = [f"  {r.word}: {r.note}" for r in report.timing_rows if r.note]
    if notes:
        lines.append("notes:")
        lines.extend(notes)
    lines.append("")
    lines.append("Comparison of retrieved results")
    lines += _table(
        ["Word", "Records without stemming rules", "Records with stemming rules"],
        [[r.word, str(r.records_exact), str(r.records_stemmed)] for r in report.recall_rows],
    )
    lines.append("")
    lines.append(
        f"Index size: with stop words {report.size_with_stops_bytes} bytes, "
        f"without stop words {report.size_without_stops_bytes} bytes"
    )
    return "\n".join(lines) + "\n"


def emit_report(report: BenchReport, fmt: str = "table") -> str:
    """Render ``report`` as ``table``, ``csv`` or ``json``."""
    if fmt in ("table", "text", "text-table"):
        return _as_text(report)
    if fmt == "csv":
        return _as_csv(report)
    if fmt == "json":
        return json.dumps(asdict(report), ensure_ascii=False, indent=2, sort_keys=True) + "\n"
    raise ValueError(f"unknown report format {fmt!r}")


def report_from_json(text: str) -> BenchReport:
    data = json.loads(text)
    return BenchReport(
        size_with_stops_bytes=data["size_with_stops_bytes"],
        size_without_stops_bytes=data["size_without_stops_bytes"],
        timing_rows=[TimingRow(**r) for r in data.get("timing_rows", [])],
        recall_rows=[RecallRow(**r) for r in data.get("recall_rows", [])],
        environment=dict(data.get("environment", {})),
    )
