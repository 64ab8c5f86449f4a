"""Loading a document collection from disk.

Every regular file directly under the corpus directory is one document.
Files are decoded strictly as UTF-8 and numbered in sorted-name order so
that the same directory always produces the same ids.
"""

from __future__ import annotations

import codecs
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator, Mapping

from .errors import CorpusEmpty, EncodingError

__all__ = ["Document", "Corpus", "load_corpus", "decode_utf8"]


@dataclass(frozen=True)
class Document:
    doc_id: int
    source_name: str
    body: str


@dataclass(frozen=True)
class Corpus:
    """An ordered, immutable collection of documents with dense ids."""

    documents: tuple[Document, ...]

    def __post_init__(self):
        for expected, doc in enumerate(self.documents):
            if doc.doc_id != expected:
                raise ValueError(
                    f"doc_ids must be dense from 0; got {doc.doc_id} at position {expected}"
                )

    @classmethod
    def from_texts(cls, texts: Iterable[str], names: Iterable[str] | None = None) -> "Corpus":
        """Build an in-memory corpus; names default to ``doc_00000`` style."""
        texts = list(texts)
        if names is None:
            names = [f"doc_{i:05d}" for i in range(len(texts))]
        names = list(names)
        if len(names) != len(texts):
            raise ValueError("names and texts differ in length")
        return cls(tuple(Document(i, n, t) for i, (n, t) in enumerate(zip(names, texts))))

    @property
    def manifest(self) -> Mapping[int, str]:
        return {doc.doc_id: doc.source_name for doc in self.documents}

    def __len__(self) -> int:
        return len(self.documents)

    def __iter__(self) -> Iterator[Document]:
        return iter(self.documents)

    def __getitem__(self, doc_id: int) -> Document:
        return self.documents[doc_id]


def decode_utf8(data: bytes, source_name: str) -> str:
    """Strictly decode ``data``, dropping a leading byte-order mark."""
    skipped = 0
    if data.startswith(codecs.BOM_UTF8):
        data = data[len(codecs.BOM_UTF8):]
        skipped = len(codecs.BOM_UTF8)
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise EncodingError(source_name, exc.start + skipped, exc.reason) from None


def load_corpus(root_path) -> Corpus:
    """Read every non-hidden regular file in ``root_path`` as one document.

    Raises:
        CorpusEmpty: if the directory does not exist or has no files.
        EncodingError: if a file is not well-formed UTF-8.
    """
    root = Path(root_path)
    if not root.is_dir():
        raise CorpusEmpty(f"corpus directory not found: {root}")
    files = sorted(
        (p for p in root.iterdir() if p.is_file() and not p.name.startswith(".")),
        key=lambda p: p.name,
    )
    if not files:
        raise CorpusEmpty(f"no documents in {root}")
    docs = []
    for doc_id, path in enumerate(files):
        body = decode_utf8(path.read_bytes(), path.name)
        docs.append(Document(doc_id, path.name, body))
    return Corpus(tuple(docs))
