from fractions import Fraction

import pytest

from cartan_gamma import PrecisionContext, RootSystemLabel, build_root_system
from cartan_gamma.cli import default_battery


@pytest.fixture(scope="session")
def ctx():
    return PrecisionContext(50)


@pytest.fixture(scope="session")
def battery():
    return default_battery()


def rs(label_text: str):
    return build_root_system(RootSystemLabel.parse(label_text))


@pytest.fixture(scope="session")
def small_labels():
    """Quick subset touching every family and both laced classes."""
    return tuple(rs(t).label for t in ("A1", "A4", "B3", "C3", "D4", "E6", "F4", "G2"))


Q = Fraction

# One line per acceptance criterion, echoed after the run summary so the
# verdicts stay visible in captured-output logs.
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
