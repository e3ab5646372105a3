import pytest

_criteria: dict[int, tuple[str, list[str]]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(num, title): acceptance criterion")


def pytest_runtest_makereport(item, call):
    if call.when != "call":
        return
    outcome = "PASS" if call.excinfo is None else "FAIL"
    for marker in item.iter_markers("criterion"):
        num, title = marker.args
        _criteria.setdefault(num, (title, []))[1].append(outcome)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_criteria):
        title, outcomes = _criteria[num]
        status = "PASS" if all(o == "PASS" for o in outcomes) else "FAIL"
        terminalreporter.write_line(f"[{status}] criterion {num}: {title}")


@pytest.fixture
def write(tmp_path):
    def _write(name: str, text: str):
        path = tmp_path / name
        path.write_text(text)
        return path
    return _write
