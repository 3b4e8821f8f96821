import pytest

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def acceptance_line():
    """Record one summary line per acceptance criterion."""

    def record(number, title, ok, seconds, limit=None, detail=""):
        budget = f" (limit {limit:g} s)" if limit is not None else ""
        status = "PASS" if ok else "FAIL"
        line = f"criterion {number}: {status} {title} [{seconds:.2f} s{budget}]"
        if detail:
            line += f" {detail}"
        ACCEPTANCE_LINES.append(line)
        print(line)

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
