import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from algcoh import _kernels  # noqa: E402


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    """Compile the numba kernels once so timing bounds exclude JIT time."""
    _kernels.rref_modp(np.eye(2, dtype=np.int64), 2)
    _kernels.idempotent_scan(np.zeros((1, 1, 1), dtype=np.int64), 2)
    yield


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[number])
