import random

import pytest
from hypothesis import strategies as st

from cyclodecomp.cyclo import CycInt


def cycints(p: int, bound: int = 50):
    return st.lists(st.integers(-bound, bound), min_size=p - 1, max_size=p - 1).map(lambda c: CycInt(p, c))


@pytest.fixture
def rng():
    return random.Random(20110126)


ACCEPTANCE_RESULTS: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    label = getattr(report, "criterion", None) or dict(report.user_properties).get("criterion")
    if label:
        ACCEPTANCE_RESULTS[label] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(ACCEPTANCE_RESULTS, key=lambda s: int(s.split()[0][2:])):
        terminalreporter.write_line(f"[{ACCEPTANCE_RESULTS[label]}] {label}")
