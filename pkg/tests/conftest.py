import random

import pytest
from hypothesis import strategies as st

from quotshrink.perm import Permutation

_CRITERIA: dict[int, tuple[str, str]] = {}


def perms(degree: int):
    """Hypothesis strategy for permutations of a fixed degree."""
    return st.permutations(list(range(1, degree + 1))).map(Permutation)


@pytest.fixture
def rng():
    return random.Random(20240607)


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    name = report.nodeid.split("::")[-1]
    if not name.startswith("test_criterion_"):
        return
    num = int(name.split("_")[2])
    outcome = "PASS" if report.outcome == "passed" else "FAIL"
    # a criterion fails if any of its cases fails
    if _CRITERIA.get(num, ("PASS",))[0] == "PASS":
        _CRITERIA[num] = (outcome, name)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_CRITERIA):
        outcome, name = _CRITERIA[num]
        terminalreporter.write_line(f"criterion {num:2d}: {outcome}  ({name})")
