import pytest

from loopstrata.rootsys import all_types, build_root_system

_CRITERIA: list[tuple[str, bool, str]] = []


@pytest.fixture
def criterion():
    """Record one acceptance line, then assert it."""

    def record(name: str, ok: bool, detail: str = ""):
        _CRITERIA.append((name, ok, detail))
        assert ok, f"{name}: {detail}"

    return record


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in _CRITERIA:
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {name}  {detail}")


SMALL_TYPES = [str(t) for t in all_types(3)]
RANK4_TYPES = [str(t) for t in all_types(4)]
ALL_TYPES = [str(t) for t in all_types(8)]


@pytest.fixture(params=SMALL_TYPES)
def small_rs(request):
    return build_root_system(request.param)
