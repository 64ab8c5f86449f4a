"""Urdu alphabetical collation.

Letters are ranked in dictionary order. Any codepoint outside the table
sorts after every ranked letter, by raw codepoint value, so the order is
total over all strings.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable

from .errors import FormatError

__all__ = ["URDU_ALPHABET", "CollationTable", "compare_terms", "load_collation", "DEFAULT_COLLATION"]

URDU_ALPHABET = (
    "ا", "آ", "ب", "پ", "ت", "ٹ", "ث", "ج", "چ", "ح", "خ", "د", "ڈ", "ذ",
    "ر", "ڑ", "ز", "ژ", "س", "ش", "ص", "ض", "ط", "ظ", "ع", "غ", "ف", "ق",
    "ک", "گ", "ل", "م", "ن", "ں", "و", "ہ", "ھ", "ء", "ی", "ے",
)


_MAX_CP = 0x10FFFF


class _KeyMap(dict):
    """Translation table for :meth:`str.translate` that fills itself lazily.

    Ranked letters become ``chr(rank)``; any other codepoint ``cp`` becomes
    ``chr(n_ranked + cp)``, so ranked letters sort first and the rest keep
    codepoint order. The few codepoints that would overflow are written as
    ``chr(0x10FFFF)`` followed by an offset, which still sorts after every
    single-character key.
    """

    def __init__(self, rank: dict[int, int]):
        super().__init__({cp: chr(r) for cp, r in rank.items()})
        self._base = len(rank)
        self._limit = _MAX_CP - self._base

    def __missing__(self, cp: int) -> str:
        if cp < self._limit:
            key = chr(self._base + cp)
        else:
            key = chr(_MAX_CP) + chr(cp - self._limit)
        self[cp] = key
        return key


class CollationTable:
    def __init__(self, letters: Iterable[str] = URDU_ALPHABET):
        letters = tuple(letters)
        rank: dict[int, int] = {}
        for i, ch in enumerate(letters):
            if len(ch) != 1:
                raise ValueError(f"collation entries must be single codepoints, got {ch!r}")
            if ord(ch) in rank:
                raise ValueError(f"duplicate collation entry {ch!r}")
            rank[ord(ch)] = i
        self.rank = rank
        self.letters = letters
        self._keymap = _KeyMap(rank)

    def sort_key(self, term: str) -> str:
        """A string whose plain ordering is the collation order of ``term``."""
        return term.translate(self._keymap)

    def __eq__(self, other):
        return isinstance(other, CollationTable) and self.letters == other.letters

    def __hash__(self):
        return hash(self.letters)

    def __repr__(self):
        return f"CollationTable({''.join(self.letters)!r})"


DEFAULT_COLLATION = CollationTable()


def compare_terms(a: str, b: str, collation: CollationTable = DEFAULT_COLLATION) -> int:
    """Three-way comparison: negative, zero or positive like ``cmp``."""
    ka, kb = collation.sort_key(a), collation.sort_key(b)
    return (ka > kb) - (ka < kb)


def load_collation(path) -> CollationTable:
    """One codepoint per line in rank order, as a literal letter or hex (``U+0627``)."""
    letters = []
    text = Path(path).read_text(encoding="utf-8-sig")
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or (line.startswith("#") and len(line) > 1):
            continue
        if len(line) == 1:
            letters.append(line)
            continue
        h = line[2:] if line.upper().startswith(("U+", "0X")) else line
        try:
            letters.append(chr(int(h, 16)))
        except ValueError:
            raise FormatError(f"not a codepoint: {line!r}", lineno) from None
    try:
        return CollationTable(letters)
    except ValueError as exc:
        raise FormatError(str(exc)) from None
