import os
import subprocess
import sys

import numpy as np
import pytest

from agcauchy import GF, kernels
from agcauchy import _kernels_py

compiled = pytest.importorskip("agcauchy._kernels")


@pytest.mark.parametrize("q", [2, 4, 7, 16, 256])
def test_act_flat_backends_agree(q):
    F = GF(q)
    rng = np.random.default_rng(q)
    w = rng.integers(0, q, size=400, dtype=np.int64)
    base = np.arange(0, 300, dtype=np.int64)
    off = np.array([0, 3, 17, 99], dtype=np.int64)
    coef = rng.integers(0, q, size=4, dtype=np.int64)
    a = compiled.act_flat(F.add_table, F.mul_table, w, base, off, coef)
    b = _kernels_py.act_flat(F.add_table, F.mul_table, w, base, off, coef)
    assert np.array_equal(a, b)


@pytest.mark.parametrize("q", [4, 7, 256])
def test_cauchy_fill_backends_agree(q):
    F = GF(q)
    rng = np.random.default_rng(q + 1)
    n = 200
    # each target depends on earlier cells only, like a real worklist
    targets = np.arange(10, n, dtype=np.int64)
    tflat = targets - 10
    choice = rng.integers(0, 2, size=len(targets), dtype=np.int64)
    ptr = np.array([0, 2, 5], dtype=np.int64)
    off = np.array([1, 9, 0, 4, 7], dtype=np.int64)
    coef = rng.integers(1, q, size=5, dtype=np.int64)
    seed = rng.integers(0, q, size=n, dtype=np.int64)
    seed[10:] = 0
    a, b = seed.copy(), seed.copy()
    compiled.cauchy_fill(F.add_table, F.mul_table, a, targets, tflat, choice, ptr, off, coef)
    _kernels_py.cauchy_fill(F.add_table, F.mul_table, b, targets, tflat, choice, ptr, off, coef)
    assert np.array_equal(a, b)
    assert a[10:].any()


def test_backend_selection():
    assert kernels.BACKEND == ("python" if os.environ.get("AGCAUCHY_PURE_PYTHON") else "compiled")
    env = dict(os.environ, AGCAUCHY_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", "import agcauchy; print(agcauchy.BACKEND)"],
                         capture_output=True, text=True, env=env, check=True)
    assert out.stdout.strip() == "python"
