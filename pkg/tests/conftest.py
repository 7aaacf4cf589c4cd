import random

import pytest

from affiche.config import load_config

# one line per acceptance criterion, printed after the run
ACCEPTANCE_RESULTS: dict[int, tuple[str, str]] = {}


def record_criterion(number: int, passed: bool, detail: str):
    ACCEPTANCE_RESULTS[number] = ("PASS" if passed else "FAIL", detail)


@pytest.fixture(scope="session")
def cfg():
    return load_config(None)


@pytest.fixture
def rng():
    return random.Random(1234)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_RESULTS:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_RESULTS):
        status, detail = ACCEPTANCE_RESULTS[number]
        tr.write_line(f"criterion {number:2d}: {status}  {detail}")
