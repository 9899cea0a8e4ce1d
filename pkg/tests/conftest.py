"""Shared test plumbing: the acceptance summary section.

test_acceptance.py appends one line per criterion to RESULTS; this hook
prints them in the terminal summary so the pass/fail ledger is visible in
captured runs (plain `pytest -v`) as well as with -s.
"""

RESULTS: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
