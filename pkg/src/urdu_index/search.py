"""Query evaluation: exact lookup and stem-expanded lookup.

Multi-word queries are combined by union. ``record_count`` is the number of
distinct documents matched; occurrence totals are kept alongside it.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .analysis import NormalizationConfig, StopList, analyze, default_config, default_stoplist
from .errors import EmptyQueryError
from .index import InvertedIndex, VocabEntry
from .ingest import Document
from .stemmer import DEFAULT_TABLE, AuxiliaryTable, stem_group, strip_auxiliary

__all__ = ["Query", "TermResult", "ResultSet", "parse_query", "lookup", "expand_term", "search"]


@dataclass(frozen=True)
class Query:
    raw: str
    terms: tuple[str, ...]
    expand: bool = False


@dataclass(frozen=True)
class TermResult:
    """Matches for one query term; ``matched_terms`` are the vocabulary terms hit."""

    term: str
    postings: tuple[tuple[int, tuple[int, ...]], ...]
    matched_terms: tuple[str, ...] = ()

    @property
    def doc_ids(self) -> set[int]:
        return {d for d, _ in self.postings}


@dataclass(frozen=True)
class ResultSet:
    query: Query
    per_term: dict[str, TermResult] = field(default_factory=dict)

    @property
    def doc_ids(self) -> list[int]:
        docs = set()
        for r in self.per_term.values():
            docs |= r.doc_ids
        return sorted(docs)

    @property
    def record_count(self) -> int:
        return len(self.doc_ids)

    @property
    def occurrence_count(self) -> int:
        return sum(len(ps) for r in self.per_term.values() for _, ps in r.postings)


def parse_query(
    raw: str,
    cfg: NormalizationConfig | None = None,
    stops: StopList | None = None,
    expand: bool = False,
    remove_stops: bool = True,
) -> Query:
    """Analyze ``raw`` exactly as a document would be, dropping duplicates."""
    cfg = cfg if cfg is not None else default_config()
    stops = stops if stops is not None else default_stoplist()
    terms = []
    for at in analyze(Document(0, "<query>", raw), cfg, stops, remove_stops):
        if at.term not in terms:
            terms.append(at.term)
    if not terms:
        raise EmptyQueryError(f"no searchable terms in query {raw!r}")
    return Query(raw, tuple(terms), expand)


def lookup(index: InvertedIndex, term: str) -> VocabEntry | None:
    """Binary search on ordered indexes, linear scan otherwise."""
    return index.find(term)


def expand_term(index: InvertedIndex, term: str, table: AuxiliaryTable = DEFAULT_TABLE) -> list[str]:
    """Vocabulary terms an expanded search for ``term`` reaches, in collation order.

    With a stem layer the stem's recorded members come from a single
    lookup; the remaining generated forms (plurals and any inflection the
    layer filed under a different stem) are probed individually.
    """
    group = stem_group(term, table)
    found: set[str] = set()
    if index.stem_layer is not None:
        members = index.stem_layer.get(strip_auxiliary(term, table), ())
        found.update(members)
    for form in group - found:
        if index.find(form) is not None:
            found.add(form)
    return sorted(found, key=index.collation.sort_key)


def _merge(entries: list[VocabEntry]) -> tuple[tuple[int, tuple[int, ...]], ...]:
    by_doc: dict[int, set[int]] = {}
    for e in entries:
        for p in e.postings:
            by_doc.setdefault(p.doc_id, set()).update(p.positions)
    return tuple((d, tuple(sorted(by_doc[d]))) for d in sorted(by_doc))


def search(index: InvertedIndex, query: Query, table: AuxiliaryTable = DEFAULT_TABLE) -> ResultSet:
    per_term = {}
    for term in query.terms:
        if query.expand:
            matched = expand_term(index, term, table)
            entries = [index.find(t) for t in matched]
        else:
            entry = index.find(term)
            entries = [entry] if entry is not None else []
            matched = [term] if entry is not None else []
        per_term[term] = TermResult(term, _merge(entries), tuple(matched))
    return ResultSet(query, per_term)
