import pytest

from slimhex import catalog


def pytest_addoption(parser):
    parser.addoption(
        "--ingest-dir",
        default=None,
        help="directory with geometry JSON files named after table rows (hex_iii.json, ...)",
    )


@pytest.fixture(scope="session")
def ingest_dir(request):
    return request.config.getoption("--ingest-dir")


@pytest.fixture(scope="session")
def geometry():
    """``geometry(key)``: memoised catalog construction shared by the whole session."""

    def get(key):
        return catalog.build(key)

    return get


_CRITERIA: list[str] = []


@pytest.fixture
def criterion():
    """``criterion(n, ok, detail)`` records one acceptance line and returns ``ok``."""

    def record(n, ok, detail):
        line = f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}"
        _CRITERIA.append(line)
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if _CRITERIA:
        terminalreporter.section("acceptance criteria")
        for line in _CRITERIA:
            terminalreporter.write_line(line)
