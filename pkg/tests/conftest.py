from hypothesis import strategies as st

from bipentropy.tableau import YoungTableau


@st.composite
def tableaux(draw, max_rows=12, max_part=12):
    rows = draw(st.lists(st.integers(1, max_part), min_size=1, max_size=max_rows))
    return YoungTableau(tuple(sorted(rows, reverse=True)))


@st.composite
def degree_lists(draw, max_len=8, max_deg=9):
    return draw(st.lists(st.integers(0, max_deg), min_size=1, max_size=max_len))


_criteria: list[tuple[str, str]] = []


def pytest_runtest_logreport(report):
    if "test_acceptance.py" in report.nodeid and report.when == "call":
        _criteria.append((report.nodeid.split("::")[-1], "PASS" if report.passed else "FAIL"))
    elif "test_acceptance.py" in report.nodeid and report.when == "setup" and report.failed:
        _criteria.append((report.nodeid.split("::")[-1], "FAIL"))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name, status in _criteria:
        terminalreporter.write_line(f"{status}  {name}")
