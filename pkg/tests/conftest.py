import random

import pytest

from regobs.generators import corpus_matrix

CORPUS_SEED = 20240611
CORPUS_SIZE = 200

_acceptance_lines: list[str] = []


def corpus(size: int = CORPUS_SIZE, seed: int = CORPUS_SEED):
    rng = random.Random(seed)
    return [corpus_matrix(rng) for _ in range(size)]


@pytest.fixture(scope="session")
def matrix_corpus():
    return corpus()


def record_acceptance(line: str) -> None:
    _acceptance_lines.append(line)


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
