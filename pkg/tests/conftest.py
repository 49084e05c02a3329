import pytest

CRITERIA = {
    1: "index table",
    2: "diamond decisions",
    3: "diamond agrees with classification on conjugates, witnesses verify",
    4: "index additivity over catalog pairs",
    5: "dim - index is even",
    6: "enveloping algebra property suite",
    7: "supercentral extraction",
    8: "supercentralizing chains",
    9: "Weyl and Clifford factors",
    10: "out-of-scope claims documented",
}

_outcomes: dict[int, list[bool]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion gate number")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    n = marker.args[0]
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        _outcomes.setdefault(n, []).append(rep.passed)


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for n, label in CRITERIA.items():
        results = _outcomes.get(n)
        if results is None:
            status = "NOT RUN"
        else:
            status = "PASS" if all(results) else "FAIL"
        terminalreporter.write_line(f"criterion {n:2d} {status:7s} {label}")
