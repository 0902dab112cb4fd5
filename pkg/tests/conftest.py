import pytest

from infobound.cosmology import BENCHMARK, CosmologyParams
from infobound.units import CODATA2018


@pytest.fixture
def K():
    return CODATA2018


@pytest.fixture
def benchmark():
    return BENCHMARK


@pytest.fixture
def matter_only():
    return CosmologyParams(BENCHMARK.H0, omega_m=1.0)


@pytest.fixture
def radiation_only():
    return CosmologyParams(BENCHMARK.H0, omega_r=1.0)


@pytest.fixture
def de_sitter():
    return CosmologyParams(BENCHMARK.H0, omega_lambda=1.0)


_acceptance: dict[int, tuple[str, str]] = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    name = report.nodeid.rsplit("::", 1)[-1]
    if not name.startswith("test_criterion_"):
        return
    number = int(name.split("_")[2])
    status = "PASS" if report.passed else "FAIL"
    prev = _acceptance.get(number)
    if prev is None or prev[0] == "PASS":
        _acceptance[number] = (status, name)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_acceptance):
        status, name = _acceptance[number]
        terminalreporter.write_line(f"criterion {number:2d}: {status}  ({name})")
