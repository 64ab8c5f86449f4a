"""Rule-based Urdu stemmer.

Words are grouped by their final letter. Plural forms are *generated* from a
word (so a query can also reach its plural occurrences), while verb
inflections are *stripped* by removing one auxiliary suffix. The two are
combined into a stem group used for expanded search.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

from .errors import EmptyTermError

__all__ = [
    "CharClass",
    "AuxiliaryTable",
    "StemRecord",
    "MIN_STEM_LENGTH",
    "DEFAULT_AUXILIARIES",
    "classify",
    "pluralize",
    "strip_auxiliary",
    "stem_group",
    "stem_record",
    "load_auxiliaries",
]

MIN_STEM_LENGTH = 2

ALIF = "\u0627"
WAO = "\u0648"
YEH = "\u06cc"
BARI_YEH = "\u06d2"

PLURAL_WAN = WAO + "\u06ba"  # wao + noon ghunna
PLURAL_YEN = YEH + "\u06ba"

# In the order the grammar lists them; AuxiliaryTable re-sorts longest first.
DEFAULT_AUXILIARIES = ("ہے", "و", "یں", "تیں", "تی", "تا", "ے", "ی", "ا", "نی", "نے", "نا")


class CharClass(enum.Enum):
    CONSONANT = "consonant"
    ALIF_WAO = "alif_wao"
    YEH = "yeh"
    BARI_YEH = "bari_yeh"


class AuxiliaryTable:
    """Auxiliary suffixes in match order: longest first, ties in listed order."""

    def __init__(self, suffixes: Iterable[str] = DEFAULT_AUXILIARIES):
        seen = []
        for s in suffixes:
            if not s:
                raise ValueError("auxiliary suffix must be non-empty")
            if s not in seen:
                seen.append(s)
        # sorted() is stable, which preserves listed order among equal lengths.
        self.suffixes: tuple[str, ...] = tuple(sorted(seen, key=len, reverse=True))

    def __iter__(self):
        return iter(self.suffixes)

    def __len__(self):
        return len(self.suffixes)

    def __eq__(self, other):
        return isinstance(other, AuxiliaryTable) and self.suffixes == other.suffixes

    def __hash__(self):
        return hash(self.suffixes)

    def __repr__(self):
        return f"AuxiliaryTable({list(self.suffixes)!r})"


DEFAULT_TABLE = AuxiliaryTable()


def load_auxiliaries(path) -> AuxiliaryTable:
    """Read one suffix per line; blank lines and ``#`` comments are skipped."""
    text = Path(path).read_text(encoding="utf-8-sig")
    suffixes = [ln.strip() for ln in text.splitlines()]
    return AuxiliaryTable(s for s in suffixes if s and not s.startswith("#"))


@dataclass(frozen=True)
class StemRecord:
    word: str
    char_class: CharClass
    stem: str
    plural_variants: tuple[str, ...]


def classify(word: str) -> CharClass:
    if not word:
        raise EmptyTermError("cannot classify an empty word")
    last = word[-1]
    if last in (ALIF, WAO):
        return CharClass.ALIF_WAO
    if last == YEH:
        return CharClass.YEH
    if last == BARI_YEH:
        return CharClass.BARI_YEH
    return CharClass.CONSONANT


def pluralize(word: str) -> list[str]:
    """Generate the regular plural forms of ``word``.

    >>> pluralize("لڑکا")
    ['لڑکوں', 'لڑکے']
    """
    cls = classify(word)
    if cls is CharClass.CONSONANT:
        return [word + PLURAL_WAN]
    if cls is CharClass.YEH:
        return [word + PLURAL_WAN, word + PLURAL_YEN]
    if cls is CharClass.ALIF_WAO and word[-1] == WAO:
        # Only alif is deleted; a wao-final word keeps its ending.
        return [word + PLURAL_WAN]
    base = word[:-1]
    if not base:
        raise EmptyTermError(f"deleting the final letter of {word!r} leaves nothing")
    forms = [base + PLURAL_WAN, base + BARI_YEH]
    return [f for f in forms if f != word]


def strip_auxiliary(word: str, table: AuxiliaryTable = DEFAULT_TABLE,
                    min_stem_length: int = MIN_STEM_LENGTH) -> str:
    """Remove the longest auxiliary suffix that leaves a long enough stem.

    One suffix at most is removed. Words with no removable suffix come back
    unchanged.
    """
    for suffix in table.suffixes:
        if word.endswith(suffix) and len(word) - len(suffix) >= min_stem_length:
            return word[: -len(suffix)]
    return word


def _plurals_or_none(word: str) -> list[str]:
    try:
        return pluralize(word)
    except EmptyTermError:
        return []


def stem_group(word: str, table: AuxiliaryTable = DEFAULT_TABLE) -> set[str]:
    """Every surface form an expanded search for ``word`` should reach.

    That is the word, its stem, the plurals of both, and the stem
    re-inflected with each auxiliary suffix.
    """
    if not word:
        raise EmptyTermError("cannot expand an empty word")
    stem = strip_auxiliary(word, table)
    group = {word, stem}
    group.update(_plurals_or_none(word))
    group.update(_plurals_or_none(stem))
    group.update(stem + aux for aux in table.suffixes)
    return group


def stem_record(word: str, table: AuxiliaryTable = DEFAULT_TABLE) -> StemRecord:
    return StemRecord(
        word=word,
        char_class=classify(word),
        stem=strip_auxiliary(word, table),
        plural_variants=tuple(pluralize(word)),
    )

