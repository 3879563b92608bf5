import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from einets.enumeration import EnumerationSpec, enumerate_networks  # noqa: E402

ACCEPTANCE_LINES: dict[int, str] = {}


@pytest.fixture(scope="session")
def catalogs():
    return {c: enumerate_networks(EnumerationSpec(2, c, 2)) for c in ("REI", "PEI", "UEI", "CEI")}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for k in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[k])
