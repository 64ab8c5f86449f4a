import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from urdu_index.analysis import default_config, default_stoplist  # noqa: E402
from urdu_index.cli import fixture_corpus_dir  # noqa: E402
from urdu_index.index import build_index  # noqa: E402
from urdu_index.ingest import Corpus, load_corpus  # noqa: E402


@pytest.fixture(scope="session")
def cfg():
    return default_config()


@pytest.fixture(scope="session")
def stops():
    return default_stoplist()


@pytest.fixture(scope="session")
def fixture_dir():
    return fixture_corpus_dir()


@pytest.fixture(scope="session")
def fixture_corpus(fixture_dir):
    return load_corpus(fixture_dir)


@pytest.fixture(scope="session")
def fixture_texts(fixture_corpus):
    return [d.body for d in fixture_corpus]


@pytest.fixture(scope="session")
def fixture_index(fixture_corpus):
    return build_index(fixture_corpus)


@pytest.fixture
def lahore_corpus():
    return Corpus.from_texts(["وہ لاہور آیا"], ["a.txt"])


# -- acceptance summary ------------------------------------------------------

ACCEPTANCE_RESULTS = []


class _Criterion:
    def __init__(self, number, title, limit_s):
        self.number, self.title, self.limit_s = number, title, limit_s
        self.detail = ""

    def __enter__(self):
        import time

        self._start = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        import time

        elapsed = time.perf_counter() - self._start
        passed = exc_type is None and elapsed < self.limit_s
        detail = self.detail or (repr(exc) if exc is not None else "")
        detail = f"{detail} [{elapsed:.2f}s, limit {self.limit_s:g}s]"
        ACCEPTANCE_RESULTS.append((self.number, self.title, passed, detail))
        print(f"[{'PASS' if passed else 'FAIL'}] {self.number}. {self.title} -- {detail}")
        if exc_type is None:
            assert elapsed < self.limit_s, f"criterion {self.number} took {elapsed:.2f}s"
        return False


@pytest.fixture
def criterion():
    """``with criterion(n, title, limit_s) as c:`` records one pass/fail line."""
    return _Criterion


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, passed, detail in sorted(ACCEPTANCE_RESULTS):
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"[{status}] {number}. {title} -- {detail}")
