import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from springer_hh import build_root_system  # noqa: E402

RANK2 = [("A", 1), ("A", 2), ("B", 2), ("G", 2)]


@pytest.fixture(params=RANK2, ids=lambda p: f"{p[0]}{p[1]}")
def small_rs(request):
    return build_root_system(*request.param)


@pytest.fixture
def a1():
    return build_root_system("A", 1)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(results):
        passed, detail = results[num]
        terminalreporter.write_line(f"criterion {num}: {'PASS' if passed else 'FAIL'}  {detail}")
