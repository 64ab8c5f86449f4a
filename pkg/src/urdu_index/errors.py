"""Exception hierarchy shared by every stage of the pipeline."""


class UrduIndexError(Exception):
    """Base class for all errors raised by this package."""


class CorpusEmpty(UrduIndexError):
    """The corpus directory is missing or holds no documents."""


class EncodingError(UrduIndexError):
    """A corpus file is not valid UTF-8."""

    def __init__(self, source_name, offset, reason=""):
        self.source_name = source_name
        self.offset = offset
        msg = f"{source_name}: invalid UTF-8 at byte offset {offset}"
        if reason:
            msg += f" ({reason})"
        super().__init__(msg)


class EmptyTermError(UrduIndexError, ValueError):
    """A stemmer operation received (or would produce) an empty term."""


class EmptyQueryError(UrduIndexError, ValueError):
    """Every query term was removed by analysis."""


class FormatError(UrduIndexError):
    """An index or configuration file could not be parsed."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class CorruptIndexError(UrduIndexError):
    """An index file parsed cleanly but violates an index invariant."""


class IndexIOError(UrduIndexError, OSError):
    """The index file could not be written or read."""
