import pytest

from sobrify.poset import build_poset

_ACCEPTANCE: list[str] = []


@pytest.fixture
def chain3():
    return build_poset(["a", "b", "c"], [("a", "b"), ("b", "c")])


@pytest.fixture
def antichain2():
    return build_poset(["a", "b"], [])


@pytest.fixture
def antichain3():
    return build_poset(["a", "b", "c"], [])


@pytest.fixture
def diamond():
    return build_poset(["b", "m1", "m2", "t"], [("b", "m1"), ("b", "m2"), ("m1", "t"), ("m2", "t")])


@pytest.fixture
def acceptance_log():
    return _ACCEPTANCE


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE:
            terminalreporter.write_line(line)
