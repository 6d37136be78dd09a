import pytest

from deltakernel import analyze
from deltakernel.corpus import (
    all_ones,
    empty_set,
    full_set,
    infinitely_many_ones,
    mixed,
    random_corpus,
    upword_grid,
)

# state names used by the hand-built automata
A, B = 0, 1  # all_ones
P, R = 0, 1  # infinitely_many_ones
C, MA, MB, MP, MR = 0, 1, 2, 3, 4  # mixed


@pytest.fixture
def aones():
    return all_ones()


@pytest.fixture
def imo():
    return infinitely_many_ones()


@pytest.fixture
def mixed_aut():
    return mixed()


@pytest.fixture
def empty_aut():
    return empty_set()


@pytest.fixture
def full_aut():
    return full_set()


@pytest.fixture(scope="session")
def corpus():
    return random_corpus()


@pytest.fixture(scope="session")
def analyzed(corpus):
    return [(aut, analyze(aut)) for aut in corpus]


@pytest.fixture(scope="session")
def small_corpus():
    return random_corpus(60, seed=7)


@pytest.fixture(scope="session")
def grid():
    return upword_grid()


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def verdict():
    """Record one PASS/FAIL line for the acceptance summary, then assert."""

    def record(name: str, ok: bool, detail: str) -> None:
        ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
        assert ok, detail

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
