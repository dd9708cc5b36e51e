"""The numba and numpy kernels must agree (exactly for integers)."""
import math
import os
import subprocess
import sys

import numpy as np
import pytest

from dedekind_ehrhart import _kernels
from dedekind_ehrhart.laurent import coth_series_singular

needs_both = pytest.mark.skipif(len(_kernels.BACKENDS) < 2, reason="numba not installed")
NB = _kernels.BACKENDS.get("numba")
NP = _kernels.BACKENDS["numpy"]


@needs_both
@pytest.mark.parametrize("b", [2, 3, 10, 97, 360, 1001])
def test_sawtooth_and_row(b):
    cot_nb, saw_nb = NB.dedekind_row(b)
    cot_np, saw_np = NP.dedekind_row(b)
    assert np.array_equal(saw_nb, saw_np)
    assert np.allclose(cot_nb, cot_np, rtol=0, atol=1e-9 * b)
    for a in range(0, b):
        assert NB.sawtooth_numerator(a, b) == NP.sawtooth_numerator(a, b)
        if math.gcd(a, b) == 1:
            assert saw_nb[a] == NB.sawtooth_numerator(a, b)


@needs_both
def test_cot_tables_fold_symmetrically():
    for table in (NB.cot_table(101), NP.cot_table(101)):
        assert np.array_equal(table[1:51], -table[100:50:-1])


@needs_both
@pytest.mark.parametrize(
    "weights,cap",
    [([1], 0), ([3, 2], 6), ([3, 2], 12), ([6, 3, 2], 6), ([105, 70, 42, 30], 630), ([1, 1, 1, 1, 1], 7), ([5, 7], -1)],
)
def test_count_simplex(weights, cap):
    assert NB.count_simplex(weights, cap) == NP.count_simplex(weights, cap)


@needs_both
def test_count_polygon():
    xs, ys = [0, 6, 9, 2], [0, -1, 8, 5]
    assert NB.count_polygon(xs, ys) == NP.count_polygon(xs, ys)


@needs_both
@pytest.mark.parametrize("moduli", [[2, 3, 6], [1, 1, 1], [3, 4, 5, 60]])
@pytest.mark.parametrize("K", [3, 6])
def test_theorem_sum(moduli, K):
    singular = np.array([coth_series_singular(c, K).coeffs for c in moduli])
    rs = np.arange(1, moduli[-1] + 1)
    a = NB.theorem_sum(moduli, singular, rs, K)
    b = NP.theorem_sum(moduli, singular, rs, K)
    assert np.allclose(a, b, rtol=1e-12, atol=1e-12)


def _backend_in_subprocess(value):
    env = dict(os.environ)
    env[_kernels.ENV_BACKEND] = value
    return subprocess.run(
        [sys.executable, "-c", "from dedekind_ehrhart import _kernels; print(_kernels.BACKEND)"],
        env=env,
        capture_output=True,
        text=True,
    )


def test_env_flag_selects_numpy():
    out = _backend_in_subprocess("numpy")
    assert out.returncode == 0 and out.stdout.strip() == "numpy"


def test_env_flag_rejects_garbage():
    out = _backend_in_subprocess("fortran")
    assert out.returncode != 0 and _kernels.ENV_BACKEND in out.stderr
