import re

import pytest

_CRITERION = re.compile(r"test_criterion_(\d\d)_")
_outcomes: dict[int, tuple[str, str]] = {}


def pytest_runtest_logreport(report):
    m = _CRITERION.search(report.nodeid)
    if not m:
        return
    n = int(m.group(1))
    if report.when == "call" or report.failed:
        status = "PASS" if report.passed else "FAIL"
        if _outcomes.get(n, ("PASS",))[0] == "PASS":
            _outcomes[n] = (status, report.nodeid.split("::")[-1])


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for n in range(1, 14):
        status, name = _outcomes.get(n, ("NOT RUN", ""))
        terminalreporter.write_line(f"criterion {n:2d}: {status:7s} {name}")


@pytest.fixture
def timer():
    import time

    class Timer:
        def __enter__(self):
            self.start = time.perf_counter()
            return self

        def __exit__(self, *exc):
            self.elapsed = time.perf_counter() - self.start

    return Timer
