import pytest

from marnet.ctm import CtmTable, build_ctm_table, default_table

_criterion_results = []


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "criterion(name): acceptance criterion checked by this test"
    )


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if report.when == "call":
        marker = item.get_closest_marker("criterion")
        if marker:
            _criterion_results.append((marker.args[0], report.passed))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if _criterion_results:
        terminalreporter.section("acceptance criteria")
        for name, ok in _criterion_results:
            terminalreporter.write_line(("PASS  " if ok else "FAIL  ") + name)


@pytest.fixture(scope="session")
def table11():
    """(1,2) space, 10 steps, 1x1 blocks: two entries, fully enumerable."""
    return build_ctm_table(1, 10, 1)


@pytest.fixture(scope="session")
def table22():
    """(2,2) space, 100 steps, 2x2 blocks: 12 of 16 codes, so the fallback
    policy is exercised."""
    return build_ctm_table(2, 100, 2)


@pytest.fixture(scope="session")
def std_table():
    """The shipped (3,2) d=2 table; covers all 16 codes."""
    return default_table()


@pytest.fixture(scope="session")
def d4_table():
    """Hand-built 4x4 table for exercising block-size-4 arithmetic."""
    all0 = 0
    all1 = (1 << 16) - 1
    entries = {
        all0: 3.0,
        all1: 9.0,
        0x0001: 5.0,
        0x8000: 5.5,
        0x00FF: 7.0,
        0xFF00: 7.25,
        0x0F0F: 8.0,
    }
    return CtmTable(4, entries, "handmade", 0, 0)
