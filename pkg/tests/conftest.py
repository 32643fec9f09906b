from pathlib import Path

import pytest

from zuluverb.lexicon import default_lexicon
from zuluverb.renderer import default_profile

DATA = Path(__file__).resolve().parents[1] / "src" / "zuluverb" / "data"


@pytest.fixture(scope="session")
def lex():
    return default_lexicon()


@pytest.fixture(scope="session")
def profile():
    return default_profile()


@pytest.fixture(scope="session")
def lexicon_path():
    return DATA / "default.lex"


_acceptance = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_criterion_" in report.nodeid:
        if report.when == "call" or report.failed:
            name = report.nodeid.split("::test_criterion_")[1]
            _acceptance[name] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_acceptance, key=lambda n: int(n.split("_")[0])):
        number, _, title = name.partition("_")
        terminalreporter.write_line(f"criterion {number} ({title.replace('_', ' ')}): {_acceptance[name]}")
