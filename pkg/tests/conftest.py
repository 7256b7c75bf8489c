from pathlib import Path

import pytest

from agcauchy import kernels
from agcauchy import _kernels_py
from agcauchy.serialize import load_code

ROOT = Path(__file__).resolve().parent.parent
SPECS = ROOT / "specs"


@pytest.fixture(scope="session")
def line7():
    return load_code(SPECS / "line7.json")


@pytest.fixture(scope="session")
def herm4():
    return load_code(SPECS / "hermitian4.json")


@pytest.fixture(params=["compiled", "python"])
def backend(request, monkeypatch):
    """Run a test once per kernel backend."""
    if request.param == "compiled":
        if kernels.BACKEND != "compiled":
            pytest.skip("compiled kernels not built")
    else:
        monkeypatch.setattr(kernels, "act_flat", _kernels_py.act_flat)
        monkeypatch.setattr(kernels, "cauchy_fill", _kernels_py.cauchy_fill)
    return request.param


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "REPORT", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
