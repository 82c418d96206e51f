import numpy as np
import pytest

from jacinterp import JacobiParams, PointSystemSpec, generate_nodes


def make(family, n, alpha=0.0, beta=0.0):
    return generate_nodes(PointSystemSpec(family, n, JacobiParams(alpha, beta)))


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


# one PASS/FAIL line per acceptance criterion, shown in the terminal summary
ACCEPTANCE_LINES = {}


def record(criterion, ok, detail=""):
    line = f"{'PASS' if ok else 'FAIL'} criterion {criterion:>2}: {detail}"
    ACCEPTANCE_LINES[criterion] = line
    print(line)
    return ok


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for k in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[k])
