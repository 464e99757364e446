"""Shared pytest hooks.

The acceptance module records its per-criterion verdict lines; echoing them
in the terminal summary makes them visible even though pytest captures the
in-test prints.
"""

import sys


def pytest_terminal_summary(terminalreporter):
    for name in ("test_acceptance", "tests.test_acceptance"):
        mod = sys.modules.get(name)
        if mod is not None and getattr(mod, "ACCEPTANCE_LINES", None):
            terminalreporter.write_line("")
            terminalreporter.write_line("acceptance criteria:")
            for line in mod.ACCEPTANCE_LINES:
                terminalreporter.write_line(line)
            break
