"""Command-line interface: ``urduidx build|search|bench|stats``.

Exit codes: 0 success, 1 usage error, 2 data error (bad corpus, malformed
index, empty query and the like). Diagnostics go to stderr only.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from importlib import resources
from pathlib import Path

from . import bench as benchmod
from .analysis import build_config, default_stoplist, load_stoplist
from .collation import DEFAULT_COLLATION, load_collation
from .errors import UrduIndexError
from .index import (
    BuildOptions,
    build_index,
    manifest_path,
    read_index,
    read_manifest,
    write_index,
    write_manifest,
)
from .ingest import load_corpus
from .search import parse_query, search
from .stemmer import DEFAULT_TABLE, load_auxiliaries

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2

log = logging.getLogger("urdu_index")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def fixture_corpus_dir() -> Path:
    """Directory of the bundled single-sentence fixture corpus."""
    return Path(str(resources.files("urdu_index").joinpath("data", "fixture")))


def _add_config_args(p):
    g = p.add_argument_group("analysis tables")
    g.add_argument("--stopwords", metavar="FILE", help="stop-word list (one term per line)")
    g.add_argument("--fold-table", metavar="FILE", help="character folding table")
    g.add_argument("--strip-set", metavar="FILE", help="codepoints to strip")
    g.add_argument("--auxiliaries", metavar="FILE", help="auxiliary suffix table")
    g.add_argument("--collation", metavar="FILE", help="alphabet order, one codepoint per line")


def _make_parser():
    parser = _Parser(prog="urduidx", description="Urdu inverted-file indexer")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("build", help="index a corpus directory")
    p.add_argument("--corpus", required=True, metavar="DIR")
    p.add_argument("--out", required=True, metavar="FILE")
    p.add_argument("--remove-stops", action=argparse.BooleanOptionalAction, default=True)
    p.add_argument("--ordered", action=argparse.BooleanOptionalAction, default=True)
    p.add_argument("--stem-layer", action=argparse.BooleanOptionalAction, default=True)
    p.add_argument("--json", action="store_true")
    _add_config_args(p)

    p = sub.add_parser("search", help="query an index file")
    p.add_argument("--index", required=True, metavar="FILE")
    p.add_argument("--query", required=True)
    p.add_argument("--expand", action="store_true", help="also match stem-group variants")
    p.add_argument("--json", action="store_true")
    _add_config_args(p)

    p = sub.add_parser("bench", help="run size, latency and recall comparisons")
    p.add_argument("--corpus", metavar="DIR", help="defaults to the bundled fixture corpus")
    p.add_argument("--reps", type=int, default=benchmod.DEFAULT_REPS)
    p.add_argument("--probes", metavar="FILE", help="probe words, one per line")
    p.add_argument("--format", choices=["table", "csv", "json"], default="table")
    p.add_argument("--out", metavar="FILE")
    _add_config_args(p)

    p = sub.add_parser("stats", help="summarize an index file")
    p.add_argument("--index", required=True, metavar="FILE")
    p.add_argument("--json", action="store_true")
    _add_config_args(p)
    return parser


def _options(args, **flags) -> BuildOptions:
    cfg = build_config(args.fold_table, args.strip_set)
    stops = load_stoplist(args.stopwords, cfg) if args.stopwords else default_stoplist()
    aux = load_auxiliaries(args.auxiliaries) if args.auxiliaries else DEFAULT_TABLE
    collation = load_collation(args.collation) if args.collation else DEFAULT_COLLATION
    return BuildOptions(cfg=cfg, stops=stops, auxiliaries=aux, collation=collation, **flags)


def _cmd_build(args) -> int:
    opts = _options(args, remove_stops=args.remove_stops, ordered=args.ordered, stem_layer=args.stem_layer)
    corpus = load_corpus(args.corpus)
    index = build_index(corpus, opts)
    size = write_index(index, args.out)
    write_manifest(corpus.manifest, manifest_path(args.out))
    if args.json:
        print(json.dumps({"index": args.out, "bytes": size, "terms": len(index), "documents": len(corpus)}))
    else:
        print(size)
    return EXIT_OK


def _cmd_search(args) -> int:
    opts = _options(args)
    index = read_index(args.index, opts.collation)
    mpath = manifest_path(args.index)
    manifest = read_manifest(mpath) if mpath.exists() else {}
    query = parse_query(
        args.query, opts.cfg, opts.stops, expand=args.expand,
        remove_stops=index.flags.stop_words_removed,
    )
    result = search(index, query, opts.auxiliaries)

    records = []
    for doc in result.doc_ids:
        by_term = {
            term: list(ps)
            for term, r in result.per_term.items()
            for d, ps in r.postings
            if d == doc
        }
        records.append({"doc": doc, "source_name": manifest.get(doc), "positions_by_term": by_term})

    if args.json:
        out = {
            "query": query.raw,
            "terms": list(query.terms),
            "expand": query.expand,
            "records": records,
            "record_count": result.record_count,
            "occurrence_count": result.occurrence_count,
            "matched_terms": {t: list(r.matched_terms) for t, r in result.per_term.items()},
        }
        print(json.dumps(out, ensure_ascii=False))
    else:
        print(f"record_count: {result.record_count}")
        for rec in records:
            where = "; ".join(f"{t}@{','.join(map(str, ps))}" for t, ps in rec["positions_by_term"].items())
            name = rec["source_name"] or ""
            print(f"{rec['doc']}\t{name}\t{where}")
    return EXIT_OK


def _read_probes(path) -> list[str]:
    text = Path(path).read_text(encoding="utf-8-sig")
    return [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.strip().startswith("#")]


def _cmd_bench(args) -> int:
    if args.reps < benchmod.MIN_REPS:
        print(f"urduidx bench: --reps must be at least {benchmod.MIN_REPS}", file=sys.stderr)
        return EXIT_USAGE
    opts = _options(args)
    corpus = load_corpus(args.corpus or fixture_corpus_dir())
    if args.probes:
        timing_probes = recall_probes = _read_probes(args.probes)
    else:
        timing_probes, recall_probes = benchmod.TABLE1_PROBES, benchmod.TABLE2_PROBES
    report = benchmod.run_bench(corpus, timing_probes, recall_probes, args.reps, opts)
    text = benchmod.emit_report(report, args.format)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8", newline="\n")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _cmd_stats(args) -> int:
    collation = load_collation(args.collation) if args.collation else DEFAULT_COLLATION
    index = read_index(args.index, collation)
    f = index.flags
    stats = {
        "terms": len(index),
        "postings": index.posting_count,
        "occurrences": sum(e.occurrences for e in index.entries),
        "stems": len(index.stem_layer) if index.stem_layer is not None else 0,
        "ordered": f.ordered,
        "stop_words_removed": f.stop_words_removed,
        "stem_layer": f.stemmed_layer,
        "bytes": Path(args.index).stat().st_size,
    }
    if args.json:
        print(json.dumps(stats))
    else:
        for k, v in stats.items():
            print(f"{k}: {v}")
    return EXIT_OK


_COMMANDS = {"build": _cmd_build, "search": _cmd_search, "bench": _cmd_bench, "stats": _cmd_stats}


def run(argv=None) -> int:
    parser = _make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr)
    try:
        return _COMMANDS[args.command](args)
    except (UrduIndexError, OSError, ValueError) as exc:
        print(f"urduidx {args.command}: {exc}", file=sys.stderr)
        return EXIT_DATA


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
