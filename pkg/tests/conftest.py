# filled by test_acceptance.py, printed once at the end of the run
ACCEPTANCE_LINES: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_LINES, key=lambda c: (not c.isdigit(), int(c) if c.isdigit() else 0, c)):
        terminalreporter.write_line(ACCEPTANCE_LINES[key])
