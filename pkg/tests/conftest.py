from __future__ import annotations

import pytest

from spreconf.generators import cycle
from spreconf.graph import StInstance


@pytest.fixture
def c4() -> StInstance:
    return StInstance(cycle(4), 0, 2)


@pytest.fixture
def c6() -> StInstance:
    return StInstance(cycle(6), 0, 3)


# One PASS/FAIL line per acceptance criterion in the terminal summary.
_criteria: dict[str, str] = {}


def pytest_runtest_logreport(report):
    name = report.nodeid.rpartition("::")[2]
    if "test_acceptance.py" not in report.nodeid or not name.startswith("test_criterion_"):
        return
    if report.when == "call" or report.failed:
        if _criteria.get(name) != "failed":
            _criteria[name] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_criteria):
        _, _, num, *words = name.split("_")
        verdict = "PASS" if _criteria[name] == "passed" else "FAIL"
        terminalreporter.write_line(f"{verdict}  criterion {int(num):2d}: {' '.join(words)}")
