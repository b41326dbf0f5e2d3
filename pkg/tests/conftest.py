"""Shared test helpers: acceptance result lines in the terminal summary."""

import pytest


def record_line(config, line: str) -> None:
    lines = getattr(config, "_acceptance_lines", None)
    if lines is None:
        lines = []
        config._acceptance_lines = lines
    lines.append(line)


@pytest.fixture
def record_acceptance(request):
    """Record a one-line verdict; it is echoed again in the final summary."""

    def record(line: str) -> None:
        print(line)
        record_line(request.config, line)

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = getattr(config, "_acceptance_lines", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
