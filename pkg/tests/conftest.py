import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from pascaldet import _backend  # noqa: E402

ACCEPTANCE_RESULTS: dict[str, tuple[bool, str]] = {}


@pytest.fixture(params=sorted(_backend.available()))
def kernels(request):
    return _backend.available()[request.param]


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE_RESULTS, key=lambda s: int(s.split()[1].rstrip(":"))):
        ok, detail = ACCEPTANCE_RESULTS[name]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name} {detail}")
