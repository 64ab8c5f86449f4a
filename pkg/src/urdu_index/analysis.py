"""Tokenization, normalization and stop-word filtering.

The same pipeline runs over documents at build time and over queries at
search time, so a query term always meets the index term in the same form.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterable, Mapping

from .errors import FormatError
from .ingest import Document

__all__ = [
    "Token",
    "AnalyzedTerm",
    "NormalizationConfig",
    "StopList",
    "tokenize",
    "normalize",
    "is_stop_word",
    "analyze",
    "default_config",
    "default_stoplist",
    "load_fold_table",
    "load_strip_set",
    "load_stoplist",
    "read_config_lines",
    "build_config",
]


@dataclass(frozen=True)
class Token:
    surface: str
    position: int
    doc_id: int = 0


@dataclass(frozen=True)
class AnalyzedTerm:
    term: str
    doc_id: int
    position: int


@dataclass(frozen=True)
class NormalizationConfig:
    """Character folding and stripping applied codepoint by codepoint.

    ``fold_table`` maps a codepoint to its canonical replacement and
    ``strip_set`` lists codepoints deleted outright. Stripping wins when a
    codepoint appears in both.
    """

    fold_table: Mapping[int, int] = field(default_factory=dict)
    strip_set: frozenset[int] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "fold_table", dict(self.fold_table))
        object.__setattr__(self, "strip_set", frozenset(self.strip_set))
        for src, dst in self.fold_table.items():
            if src == dst:
                continue
            # Both checks keep normalize idempotent.
            if dst in self.fold_table and self.fold_table[dst] != dst:
                raise ValueError(f"fold target U+{dst:04X} is itself folded")
            if dst in self.strip_set:
                raise ValueError(f"fold target U+{dst:04X} is in the strip set")
        table: dict[int, int | None] = {cp: None for cp in self.strip_set}
        for src, dst in self.fold_table.items():
            table.setdefault(src, dst)
        object.__setattr__(self, "_translation", table)

    def apply(self, text: str) -> str:
        return text.translate(self._translation)


@dataclass(frozen=True)
class StopList:
    words: frozenset[str] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "words", frozenset(self.words))

    def __contains__(self, term: str) -> bool:
        return term in self.words

    def __len__(self) -> int:
        return len(self.words)

    @classmethod
    def from_words(cls, words: Iterable[str], cfg: NormalizationConfig | None = None) -> "StopList":
        """Build a stop list, normalizing each entry under ``cfg`` when given."""
        if cfg is not None:
            words = (normalize(w, cfg) for w in words)
        return cls(frozenset(w for w in words if w))


def tokenize(body: str, doc_id: int = 0) -> list[Token]:
    """Split on Unicode whitespace; positions are dense token ordinals."""
    return [Token(surface, pos, doc_id) for pos, surface in enumerate(body.split())]


def normalize(surface: str, cfg: NormalizationConfig) -> str:
    return cfg.apply(surface)


def is_stop_word(term: str, stops: StopList) -> bool:
    return term in stops.words


def analyze(
    doc: Document,
    cfg: NormalizationConfig,
    stops: StopList,
    remove_stops: bool = True,
) -> list[AnalyzedTerm]:
    """Run tokenize, normalize and stop filtering over one document.

    Positions are the pre-removal token ordinals, so dropped stop words and
    punctuation-only tokens leave gaps.
    """
    out = []
    for tok in tokenize(doc.body, doc.doc_id):
        term = cfg.apply(tok.surface)
        if not term:
            continue
        if remove_stops and term in stops.words:
            continue
        out.append(AnalyzedTerm(term, doc.doc_id, tok.position))
    return out


# -- configuration files ----------------------------------------------------


def read_config_lines(text: str) -> Iterable[tuple[int, str]]:
    """Yield ``(line_number, stripped_line)`` skipping blanks and ``#`` comments."""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def _parse_codepoint(token: str, lineno: int) -> int:
    t = token.upper()
    if t.startswith("U+"):
        t = t[2:]
    elif t.startswith("0X"):
        t = t[2:]
    try:
        cp = int(t, 16)
    except ValueError:
        raise FormatError(f"not a hex codepoint: {token!r}", lineno) from None
    if not 0 <= cp <= 0x10FFFF:
        raise FormatError(f"codepoint out of range: {token!r}", lineno)
    return cp


def _read_text(path) -> str:
    return Path(path).read_text(encoding="utf-8-sig")


def parse_fold_table(text: str) -> dict[int, int]:
    table = {}
    for lineno, line in read_config_lines(text):
        parts = line.split()
        if len(parts) != 2:
            raise FormatError("expected '<hex> <hex>'", lineno)
        table[_parse_codepoint(parts[0], lineno)] = _parse_codepoint(parts[1], lineno)
    return table


def parse_strip_set(text: str) -> frozenset[int]:
    return frozenset(_parse_codepoint(line, lineno) for lineno, line in read_config_lines(text))


def load_fold_table(path) -> dict[int, int]:
    return parse_fold_table(_read_text(path))


def load_strip_set(path) -> frozenset[int]:
    return parse_strip_set(_read_text(path))


def load_stoplist(path, cfg: NormalizationConfig | None = None) -> StopList:
    words = [line for _, line in read_config_lines(_read_text(path))]
    return StopList.from_words(words, cfg if cfg is not None else default_config())


def _data_text(name: str) -> str:
    return resources.files(__package__).joinpath("data", name).read_text(encoding="utf-8")


_DEFAULT_CONFIG: NormalizationConfig | None = None
_DEFAULT_STOPS: StopList | None = None


def default_config() -> NormalizationConfig:
    """The shipped Urdu folding and stripping tables."""
    global _DEFAULT_CONFIG
    if _DEFAULT_CONFIG is None:
        _DEFAULT_CONFIG = NormalizationConfig(
            parse_fold_table(_data_text("fold_table.txt")),
            parse_strip_set(_data_text("strip_set.txt")),
        )
    return _DEFAULT_CONFIG


def default_stoplist() -> StopList:
    global _DEFAULT_STOPS
    if _DEFAULT_STOPS is None:
        words = [line for _, line in read_config_lines(_data_text("stopwords.txt"))]
        _DEFAULT_STOPS = StopList.from_words(words, default_config())
    return _DEFAULT_STOPS


def build_config(fold_path=None, strip_path=None) -> NormalizationConfig:
    """Default config with either table optionally replaced from a file."""
    base = default_config()
    fold = load_fold_table(fold_path) if fold_path else base.fold_table
    strip = load_strip_set(strip_path) if strip_path else base.strip_set
    return NormalizationConfig(fold, strip)
