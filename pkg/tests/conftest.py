import sys


def pytest_terminal_summary(terminalreporter):
    # echo the PASS/FAIL lines collected by test_acceptance.py
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for key in sorted(lines):
            terminalreporter.write_line(lines[key])
