"""The inverted file: vocabulary plus occurrences.

An index is built from a corpus in one of several variants (stop words kept
or removed, vocabulary ordered by Urdu collation or left in first-encounter
order, with or without a stem layer) and persisted in a line-oriented UTF-8
text format::

    URDUIDX 1 ordered=1 stopless=1 stemlayer=1 terms=2
    <term>\\t<df>\\t<doc>:<pos>,<pos>;<doc>:<pos>
    ...
    #STEMS 1
    <stem>\\t<term>,<term>

Lookups on an ordered index use binary search over collation keys; an
unordered index can only be scanned linearly.
"""

from __future__ import annotations

import bisect
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping, Sequence

from .analysis import NormalizationConfig, StopList, analyze, default_config, default_stoplist
from .collation import DEFAULT_COLLATION, CollationTable
from .errors import CorpusEmpty, CorruptIndexError, FormatError, IndexIOError
from .ingest import Corpus
from .stemmer import DEFAULT_TABLE, AuxiliaryTable, strip_auxiliary

__all__ = [
    "Posting",
    "VocabEntry",
    "IndexFlags",
    "InvertedIndex",
    "BuildOptions",
    "build_index",
    "serialize_index",
    "parse_index",
    "write_index",
    "read_index",
    "write_manifest",
    "read_manifest",
    "MAGIC",
]

MAGIC = "URDUIDX"
FORMAT_VERSION = 1

_HEADER_RE = re.compile(
    r"URDUIDX (\d+) ordered=([01]) stopless=([01]) stemlayer=([01]) terms=(\d+)"
)
_STEMS_RE = re.compile(r"#STEMS (\d+)")
_FORBIDDEN_IN_TERM = ("\t", "\n", "\r")


@dataclass(frozen=True)
class Posting:
    doc_id: int
    positions: tuple[int, ...]


@dataclass(frozen=True)
class VocabEntry:
    term: str
    postings: tuple[Posting, ...]

    @property
    def doc_frequency(self) -> int:
        return len(self.postings)

    @property
    def occurrences(self) -> int:
        return sum(len(p.positions) for p in self.postings)


@dataclass(frozen=True)
class IndexFlags:
    stop_words_removed: bool = True
    ordered: bool = True
    stemmed_layer: bool = True


@dataclass(frozen=True)
class BuildOptions:
    """Everything that determines the bytes of a built index."""

    remove_stops: bool = True
    ordered: bool = True
    stem_layer: bool = True
    cfg: NormalizationConfig = field(default_factory=default_config)
    stops: StopList = field(default_factory=default_stoplist)
    auxiliaries: AuxiliaryTable = DEFAULT_TABLE
    collation: CollationTable = DEFAULT_COLLATION

    def variant(self, **changes) -> "BuildOptions":
        from dataclasses import replace

        return replace(self, **changes)


class InvertedIndex:
    """An immutable vocabulary with postings, in build order.

    ``stem_layer`` maps a stem to the vocabulary terms reducing to it, or is
    ``None`` for indexes built without one.
    """

    def __init__(
        self,
        entries: Sequence[VocabEntry],
        flags: IndexFlags,
        collation: CollationTable = DEFAULT_COLLATION,
        stem_layer: Mapping[str, Sequence[str]] | None = None,
    ):
        self.entries: tuple[VocabEntry, ...] = tuple(entries)
        self.flags = flags
        self.collation = collation
        self.stem_layer: dict[str, tuple[str, ...]] | None = (
            None if stem_layer is None else {k: tuple(v) for k, v in stem_layer.items()}
        )
        self._terms = [e.term for e in self.entries]
        self._keys = [collation.sort_key(t) for t in self._terms] if flags.ordered else None

    # -- lookup ---------------------------------------------------------

    def linear_search(self, term: str) -> VocabEntry | None:
        try:
            return self.entries[self._terms.index(term)]
        except ValueError:
            return None

    def binary_search(self, term: str) -> VocabEntry | None:
        if self._keys is None:
            raise ValueError("binary search needs an ordered index")
        keys = self._keys
        key = self.collation.sort_key(term)
        i = bisect.bisect_left(keys, key)
        if i < len(keys) and keys[i] == key:
            return self.entries[i]
        return None

    def find(self, term: str) -> VocabEntry | None:
        if self.flags.ordered:
            return self.binary_search(term)
        return self.linear_search(term)

    # -- inspection ------------------------------------------------------

    @property
    def terms(self) -> list[str]:
        return list(self._terms)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    @property
    def posting_count(self) -> int:
        return sum(e.doc_frequency for e in self.entries)

    def triples(self) -> set[tuple[str, int, int]]:
        """All ``(term, doc_id, position)`` occurrences in the index."""
        return {
            (e.term, p.doc_id, pos)
            for e in self.entries
            for p in e.postings
            for pos in p.positions
        }

    def __eq__(self, other):
        if not isinstance(other, InvertedIndex):
            return NotImplemented
        return (
            self.entries == other.entries
            and self.flags == other.flags
            and self.stem_layer == other.stem_layer
        )

    def __repr__(self):
        return f"InvertedIndex(terms={len(self.entries)}, flags={self.flags})"

    def validate(self, stops: StopList | None = None) -> None:
        """Raise CorruptIndexError if any structural invariant is broken.

        The stop-word invariant can only be checked when the build-time
        stop list is supplied.
        """
        seen = set()
        for e in self.entries:
            if not e.term or any(c in e.term for c in _FORBIDDEN_IN_TERM):
                raise CorruptIndexError(f"invalid term {e.term!r}")
            if e.term in seen:
                raise CorruptIndexError(f"duplicate term {e.term!r}")
            seen.add(e.term)
            if not e.postings:
                raise CorruptIndexError(f"term {e.term!r} has no postings")
            prev_doc = -1
            for p in e.postings:
                if p.doc_id <= prev_doc:
                    raise CorruptIndexError(f"postings of {e.term!r} not in increasing doc order")
                prev_doc = p.doc_id
                if not p.positions:
                    raise CorruptIndexError(f"empty position list for {e.term!r} in doc {p.doc_id}")
                if p.positions[0] < 0 or any(a >= b for a, b in zip(p.positions, p.positions[1:])):
                    raise CorruptIndexError(
                        f"positions of {e.term!r} in doc {p.doc_id} not strictly increasing"
                    )
        if self.flags.ordered:
            keys = self._keys
            for i in range(1, len(keys)):
                if not keys[i - 1] < keys[i]:
                    raise CorruptIndexError(
                        f"terms out of collation order: {self._terms[i - 1]!r} before {self._terms[i]!r}"
                    )
        if stops is not None and self.flags.stop_words_removed:
            leaked = [t for t in self._terms if t in stops.words]
            if leaked:
                raise CorruptIndexError(f"stop words present in a stopless index: {leaked[:5]}")
        if self.flags.stemmed_layer != (self.stem_layer is not None):
            raise CorruptIndexError("stem layer presence disagrees with its flag")
        if self.stem_layer is not None:
            for stem, members in self.stem_layer.items():
                if not members:
                    raise CorruptIndexError(f"stem {stem!r} has no members")
                missing = [m for m in members if m not in seen]
                if missing:
                    raise CorruptIndexError(f"stem {stem!r} lists unknown terms {missing}")


# -- building -------------------------------------------------------------------


def build_index(corpus: Corpus, options: BuildOptions | None = None) -> InvertedIndex:
    """Index every analyzed term of every document in ``corpus``."""
    if options is None:
        options = BuildOptions()
    if len(corpus) == 0:
        raise CorpusEmpty("cannot index an empty corpus")
    occurrences: dict[str, dict[int, list[int]]] = {}
    for doc in corpus:
        for at in analyze(doc, options.cfg, options.stops, options.remove_stops):
            occurrences.setdefault(at.term, {}).setdefault(at.doc_id, []).append(at.position)

    entries = [
        VocabEntry(term, tuple(Posting(d, tuple(ps)) for d, ps in docs.items()))
        for term, docs in occurrences.items()
    ]
    collation = options.collation
    if options.ordered:
        entries.sort(key=lambda e: collation.sort_key(e.term))

    layer = None
    if options.stem_layer:
        layer = {}
        for e in entries:
            layer.setdefault(strip_auxiliary(e.term, options.auxiliaries), []).append(e.term)
        if options.ordered:
            layer = {k: layer[k] for k in sorted(layer, key=collation.sort_key)}

    flags = IndexFlags(options.remove_stops, options.ordered, options.stem_layer)
    return InvertedIndex(entries, flags, collation, layer)


# -- serialization --------------------------------------------------------------


def _check_term(term: str, extra: str = "") -> None:
    bad = _FORBIDDEN_IN_TERM + tuple(extra)
    if not term or any(c in term for c in bad):
        raise ValueError(f"term {term!r} cannot be serialized")


def serialize_index(index: InvertedIndex) -> bytes:
    f = index.flags
    lines = [
        f"{MAGIC} {FORMAT_VERSION} ordered={int(f.ordered)} stopless={int(f.stop_words_removed)} "
        f"stemlayer={int(f.stemmed_layer)} terms={len(index.entries)}"
    ]
    for e in index.entries:
        _check_term(e.term)
        postings = ";".join(
            f"{p.doc_id}:" + ",".join(map(str, p.positions)) for p in e.postings
        )
        lines.append(f"{e.term}\t{e.doc_frequency}\t{postings}")
    if f.stemmed_layer:
        layer = index.stem_layer or {}
        lines.append(f"#STEMS {len(layer)}")
        for stem, members in layer.items():
            _check_term(stem)
            for m in members:
                _check_term(m, ",")
            lines.append(f"{stem}\t" + ",".join(members))
    return ("\n".join(lines) + "\n").encode("utf-8")


def write_index(index: InvertedIndex, path) -> int:
    """Write ``index`` to ``path``; returns the number of bytes written."""
    data = serialize_index(index)
    try:
        with open(path, "wb") as fh:
            fh.write(data)
    except OSError as exc:
        raise IndexIOError(exc.errno, f"cannot write index: {exc.strerror}", str(path)) from exc
    return len(data)


def _parse_int(text: str, lineno: int, what: str) -> int:
    if not text.isascii() or not text.isdigit():
        raise FormatError(f"bad {what} {text!r}", lineno)
    return int(text)


def _parse_postings(text: str, lineno: int) -> tuple[Posting, ...]:
    postings = []
    for chunk in text.split(";"):
        doc, sep, plist = chunk.partition(":")
        if not sep or not plist:
            raise FormatError(f"malformed posting {chunk!r}", lineno)
        doc_id = _parse_int(doc, lineno, "doc id")
        positions = tuple(_parse_int(p, lineno, "position") for p in plist.split(","))
        postings.append(Posting(doc_id, positions))
    return tuple(postings)


def parse_index(data: bytes | str, collation: CollationTable = DEFAULT_COLLATION) -> InvertedIndex:
    """Inverse of :func:`serialize_index`; re-validates every invariant."""
    if isinstance(data, bytes):
        try:
            text = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise FormatError(f"index is not UTF-8 (byte {exc.start})") from None
    else:
        text = data
    if not text:
        raise FormatError("empty index file", 1)
    lines = text.split("\n")
    if lines[-1] != "":
        raise FormatError("truncated line (missing final newline)", len(lines))
    lines.pop()

    m = _HEADER_RE.fullmatch(lines[0])
    if not m:
        raise FormatError(f"bad header {lines[0][:80]!r}", 1)
    version, ordered, stopless, stemlayer, n_terms = m.groups()
    if int(version) != FORMAT_VERSION:
        raise FormatError(f"unsupported format version {version}", 1)
    n_terms = int(n_terms)
    flags = IndexFlags(stopless == "1", ordered == "1", stemlayer == "1")

    entries = []
    for i in range(n_terms):
        lineno = i + 2
        if lineno > len(lines):
            raise FormatError(f"expected {n_terms} terms, file ends after {i}", lineno)
        parts = lines[lineno - 1].split("\t")
        if len(parts) != 3 or not parts[0]:
            raise FormatError("expected '<term>\\t<df>\\t<postings>'", lineno)
        term, df, postings = parts
        if "\r" in term:
            raise FormatError("carriage return in term", lineno)
        df = _parse_int(df, lineno, "document frequency")
        entry = VocabEntry(term, _parse_postings(postings, lineno))
        if entry.doc_frequency != df:
            raise CorruptIndexError(
                f"line {lineno}: df {df} but {entry.doc_frequency} postings for {term!r}"
            )
        entries.append(entry)

    pos = n_terms + 1
    layer = None
    if flags.stemmed_layer:
        lineno = pos + 1
        if pos >= len(lines):
            raise FormatError("missing #STEMS section", lineno)
        sm = _STEMS_RE.fullmatch(lines[pos])
        if not sm:
            raise FormatError(f"expected '#STEMS <M>', got {lines[pos][:80]!r}", lineno)
        n_stems = int(sm.group(1))
        pos += 1
        layer = {}
        for _ in range(n_stems):
            lineno = pos + 1
            if pos >= len(lines):
                raise FormatError(f"expected {n_stems} stem lines", lineno)
            parts = lines[pos].split("\t")
            if len(parts) != 2 or not parts[0] or not parts[1]:
                raise FormatError("expected '<stem>\\t<term>,<term>...'", lineno)
            if parts[0] in layer:
                raise CorruptIndexError(f"line {lineno}: duplicate stem {parts[0]!r}")
            layer[parts[0]] = parts[1].split(",")
            pos += 1
    if pos != len(lines):
        raise FormatError("unexpected content after index body", pos + 1)

    index = InvertedIndex(entries, flags, collation, layer)
    index.validate()
    return index


def read_index(path, collation: CollationTable = DEFAULT_COLLATION) -> InvertedIndex:
    try:
        data = Path(path).read_bytes()
    except OSError as exc:
        raise IndexIOError(exc.errno, f"cannot read index: {exc.strerror}", str(path)) from exc
    return parse_index(data, collation)


# -- document manifest ----------------------------------------------------------
# The index stores doc ids only; source names travel in a sidecar file.


def manifest_path(index_path) -> Path:
    p = Path(index_path)
    return p.with_name(p.name + ".docs")


def write_manifest(manifest: Mapping[int, str], path) -> None:
    lines = [f"{doc_id}\t{name}" for doc_id, name in sorted(manifest.items())]
    Path(path).write_text("".join(line + "\n" for line in lines), encoding="utf-8", newline="\n")


def read_manifest(path) -> dict[int, str]:
    out = {}
    text = Path(path).read_text(encoding="utf-8")
    for lineno, line in enumerate(text.splitlines(), start=1):
        doc, sep, name = line.partition("\t")
        if not sep:
            raise FormatError("expected '<doc>\\t<source_name>'", lineno)
        out[_parse_int(doc, lineno, "doc id")] = name
    return out
