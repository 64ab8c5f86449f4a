"""Inverted-file indexing, rule-based stemming and search for Urdu text."""

from .analysis import (
    AnalyzedTerm,
    NormalizationConfig,
    StopList,
    Token,
    analyze,
    default_config,
    default_stoplist,
    is_stop_word,
    normalize,
    tokenize,
)
from .collation import DEFAULT_COLLATION, CollationTable, compare_terms
from .errors import (
    CorpusEmpty,
    CorruptIndexError,
    EmptyQueryError,
    EmptyTermError,
    EncodingError,
    FormatError,
    IndexIOError,
    UrduIndexError,
)
from .index import (
    BuildOptions,
    IndexFlags,
    InvertedIndex,
    Posting,
    VocabEntry,
    build_index,
    read_index,
    write_index,
)
from .ingest import Corpus, Document, load_corpus
from .search import Query, ResultSet, lookup, parse_query, search
from .stemmer import AuxiliaryTable, CharClass, classify, pluralize, stem_group, strip_auxiliary

__version__ = "0.1.0"

__all__ = [
    "AnalyzedTerm",
    "AuxiliaryTable",
    "BuildOptions",
    "CharClass",
    "CollationTable",
    "Corpus",
    "CorpusEmpty",
    "CorruptIndexError",
    "DEFAULT_COLLATION",
    "Document",
    "EmptyQueryError",
    "EmptyTermError",
    "EncodingError",
    "FormatError",
    "IndexFlags",
    "IndexIOError",
    "InvertedIndex",
    "NormalizationConfig",
    "Posting",
    "Query",
    "ResultSet",
    "StopList",
    "Token",
    "UrduIndexError",
    "VocabEntry",
    "analyze",
    "build_index",
    "classify",
    "compare_terms",
    "default_config",
    "default_stoplist",
    "is_stop_word",
    "load_corpus",
    "lookup",
    "normalize",
    "parse_query",
    "pluralize",
    "read_index",
    "search",
    "stem_group",
    "strip_auxiliary",
    "tokenize",
    "write_index",
]
