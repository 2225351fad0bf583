import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

# lines collected by test_acceptance, echoed after the run regardless of capture
ACCEPTANCE_LINES: list = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
