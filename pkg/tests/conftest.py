import numpy as np
import pytest


@pytest.fixture
def rng():
    return np.random.default_rng(20240229)


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            if "test_acceptance.py" in rep.nodeid and rep.when == "call":
                detail = "; ".join(f"{k}={v}" for k, v in rep.user_properties)
                lines.append((rep.nodeid.split("::")[-1], outcome, detail))
    if lines:
        terminalreporter.section("acceptance criteria")
        for name, outcome, detail in sorted(lines):
            status = "PASS" if outcome == "passed" else "FAIL"
            terminalreporter.write_line(f"{status}  {name}  {detail}".rstrip())
