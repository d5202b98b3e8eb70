"""Shared test hooks: surface the acceptance-criterion summary lines.

pytest captures per-test stdout, so the one-line pass/fail reports from
the acceptance harness are collected here and echoed in the terminal
summary where they stay visible in `pytest -v` output.
"""

CRITERION_LINES = []


def record_criterion_line(line):
    CRITERION_LINES.append(line)


def pytest_terminal_summary(terminalreporter):
    if CRITERION_LINES:
        terminalreporter.section("acceptance criteria")
        for line in CRITERION_LINES:
            terminalreporter.write_line(line)
