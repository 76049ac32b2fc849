import pytest


def pytest_addoption(parser):
    parser.addoption("--extended", action="store_true", default=False,
                     help="run long checks such as the n = 8 exhaustive scan (~15 min)")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--extended"):
        return
    skip = pytest.mark.skip(reason="extended run: pass --extended")
    for item in items:
        if "extended" in item.keywords:
            item.add_marker(skip)


ACCEPTANCE_RESULTS = []


@pytest.fixture
def criterion(request):
    """Record one acceptance criterion: yields a dict the test fills in."""
    import time

    entry = {"name": request.node.name, "detail": ""}
    start = time.perf_counter()
    yield entry
    entry["seconds"] = time.perf_counter() - start
    entry["passed"] = getattr(request.node, "_criterion_passed", False)
    ACCEPTANCE_RESULTS.append(entry)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if report.when == "call" and "criterion" in item.fixturenames:
        item._criterion_passed = report.passed


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for entry in ACCEPTANCE_RESULTS:
        status = "PASS" if entry.get("passed") else "FAIL"
        terminalreporter.write_line(
            f"{status}  {entry['name']:<50} {entry['seconds']:8.2f} s  {entry['detail']}")
