import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
	if ACCEPTANCE_LINES:
		terminalreporter.section('acceptance criteria')
		for line in ACCEPTANCE_LINES:
			terminalreporter.write_line(line)
