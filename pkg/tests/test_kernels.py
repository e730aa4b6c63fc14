from __future__ import annotations

import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import naive_grundy
from subgames import _kernels as K

needs_numba = pytest.mark.skipif(not K.HAVE_NUMBA, reason="numba not installed")

moves_st = st.lists(st.integers(1, 30), min_size=1, max_size=5, unique=True).map(sorted)


def _fill(kernel, moves, n, start=0, head=None):
    vals = np.zeros(n, dtype=np.uint8)
    if head is not None:
        vals[: len(head)] = head
    kernel(np.asarray(moves, dtype=np.int64), vals, start)
    return vals


@given(moves_st, st.integers(1, 400))
def test_numpy_fill_matches_naive(moves, n):
    assert _fill(K.grundy_fill_np, moves, n).tolist() == naive_grundy(moves, n - 1)


@needs_numba
@given(moves_st, st.integers(1, 400), st.data())
def test_backends_agree_on_fill(moves, n, data):
    full = naive_grundy(moves, n - 1)
    start = data.draw(st.integers(0, n))
    for kernel in (K.grundy_fill_np, K.grundy_fill_nb):
        assert _fill(kernel, moves, n, start, full[:start]).tolist() == full


@needs_numba
@given(moves_st, st.integers(20, 600))
@settings(max_examples=80)
def test_backends_agree_on_period_search(moves, n):
    vals = np.asarray(naive_grundy(moves, n - 1), dtype=np.uint8)
    window = moves[-1]
    assert K.find_period_np(vals, window) == tuple(K.find_period_nb(vals, window))
    for p in (1, 2, 3, 7):
        assert K.preperiod_for_np(vals, p) == K.preperiod_for_nb(vals, p)


@needs_numba
@given(st.lists(st.integers(0, 3), min_size=30, max_size=200), st.data())
def test_backends_agree_on_member_scan(values, data):
    ext = np.asarray(values, dtype=np.uint8)
    span = data.draw(st.integers(1, len(values) // 2))
    max_s = len(values) - span
    assert np.array_equal(K.member_scan_np(ext, span, max_s), K.member_scan_nb(ext, span, max_s))


def test_find_period_reports_failure():
    vals = np.asarray(naive_grundy((1, 50), 40), dtype=np.uint8)
    assert tuple(K.find_period(vals, 50)) == (-1, -1)


@pytest.mark.parametrize("flag, backend", [("1", "numpy"), ("", "numba" if K.HAVE_NUMBA else "numpy")])
def test_env_flag_selects_backend(flag, backend):
    env = {**os.environ, "SUBGAMES_NO_NUMBA": flag}
    code = (
        "import subgames, subgames._kernels as K;"
        "from subgames import analyze, SubtractionSet;"
        "a = analyze(SubtractionSet((3, 5, 9)));"
        "print(subgames.BACKEND, K.grundy_fill.__name__, a.period, a.preperiod)"
    )
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    name, kernel, p, n0 = out.stdout.split()
    assert name == backend
    assert kernel.endswith("_np" if backend == "numpy" else "_nb")
    assert (int(p), int(n0)) == (2, 14)
