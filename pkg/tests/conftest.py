import re

import pytest

from dualdegree.verify import verify_theorem

_ACCEPTANCE = {}


@pytest.fixture(scope="session")
def theorem_report():
    cache = {}

    def get(n):
        if n not in cache:
            cache[n] = verify_theorem(n)
        return cache[n]

    return get


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    match = re.match(r"test_criterion_(\d+)_(\w+?)(\[|$)", name)
    if match is None:
        return
    if report.when == "call" or report.outcome != "passed":
        key = (int(match.group(1)), match.group(2))
        runs = _ACCEPTANCE.setdefault(key, {})
        if report.outcome != "passed" or name not in runs:
            runs[name] = report.outcome == "passed"


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for (number, title), runs in sorted(_ACCEPTANCE.items()):
        passed = sum(runs.values())
        verdict = "PASS" if passed == len(runs) else "FAIL"
        terminalreporter.write_line(f"criterion {number} {verdict} ({passed}/{len(runs)}) {title}")
