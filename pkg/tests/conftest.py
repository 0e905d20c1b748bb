import pytest

from modquad.harness import Config, run_checks


@pytest.fixture(scope="session")
def full_run():
    """Every registered check under the default config, run serially once per session."""
    return run_checks(None, Config())


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
