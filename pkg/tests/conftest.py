import pytest
from hypothesis import settings

from grw.gf_arith import make_field

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def pytest_addoption(parser):
    parser.addoption("--update-golden", action="store_true", help="rewrite files under tests/golden")


@pytest.fixture
def update_golden(request):
    return request.config.getoption("--update-golden")


@pytest.fixture(scope="session")
def F4():
    return make_field(2, 1, 2)


@pytest.fixture(scope="session")
def F8():
    return make_field(2, 1, 3)


@pytest.fixture(scope="session")
def F16():
    return make_field(2, 1, 4)


@pytest.fixture(scope="session")
def F9():
    return make_field(3, 1, 2)


_ACCEPTANCE = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(num, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker and rep.when == "call":
        num, title = marker.args
        _ACCEPTANCE.append((num, title, "PASS" if rep.passed else "FAIL"))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num, title, verdict in sorted(_ACCEPTANCE):
        terminalreporter.write_line(f"criterion {num}: {verdict}  {title}")
