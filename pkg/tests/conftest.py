import pytest

from misnormal import families as F
from misnormal.graph import build_graph


@pytest.fixture(scope="session")
def C5():
    return F.generate("cycle:5")


@pytest.fixture(scope="session")
def C4():
    return F.generate("cycle:4")


@pytest.fixture(scope="session")
def K2():
    return F.generate("complete:2")


@pytest.fixture(scope="session")
def K3():
    return F.generate("complete:3")


@pytest.fixture(scope="session")
def two_K3():
    return F.generate("copies:2xcomplete:3")


@pytest.fixture(scope="session")
def petersen():
    return F.generate("kneser:5,2")


@pytest.fixture(scope="session")
def P3():
    return build_graph(3, [(0, 1), (1, 2)])


_ACCEPTANCE: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    if report.when == "call" or report.outcome != "passed":
        if report.failed or name not in _ACCEPTANCE:
            _ACCEPTANCE[name] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    from tests.test_acceptance import TITLES

    terminalreporter.section("acceptance criteria")
    for name, title in TITLES.items():
        if name in _ACCEPTANCE:
            verdict = "PASS" if _ACCEPTANCE[name] == "passed" else "FAIL"
            terminalreporter.write_line(f"{verdict}  {title}")
