"""Hot loops: the mex recurrence, the period search and the expansion scan.

Every kernel exists twice, as a numba ``@njit`` function and as a pure-numpy
function with the same signature. ``SUBGAMES_NO_NUMBA=1`` in the environment
(read at import time) selects the numpy path; so does a missing numba.
"""

from __future__ import annotations

import os

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

USE_NUMBA = HAVE_NUMBA and os.environ.get("SUBGAMES_NO_NUMBA", "") not in ("1", "true", "yes")
BACKEND = "numba" if USE_NUMBA else "numpy"


# ---------------------------------------------------------------------------
# pure numpy
# ---------------------------------------------------------------------------


def grundy_fill_np(moves: np.ndarray, values: np.ndarray, start: int) -> None:
    """Fill ``values[start:]`` in place from the mex recurrence.

    Positions ``n .. n + s1 - 1`` only look back at least ``s1`` places, so a
    whole block of width ``s1`` is computed in one vectorized step.
    """
    n_total = values.shape[0]
    k = moves.shape[0]
    s1 = int(moves[0])
    n = start
    while n < n_total:
        stop = min(n + s1, n_total)
        idx = np.arange(n, stop)
        present = np.zeros((k + 2, stop - n), dtype=bool)
        cols = np.arange(stop - n)
        for s in moves:
            src = idx - s
            ok = src >= 0
            if not ok.any():
                break
            present[values[src[ok]], cols[ok]] = True
        values[n:stop] = np.argmin(present, axis=0)
        n = stop


def preperiod_for_np(values: np.ndarray, p: int) -> int:
    """Least n0 with values[n + p] == values[n] for every n0 <= n < len - p."""
    if p >= values.shape[0]:
        return 0
    bad = np.flatnonzero(values[p:] != values[:-p])
    return int(bad[-1]) + 1 if bad.size else 0


def find_period_np(values: np.ndarray, window: int) -> tuple[int, int]:
    """Smallest p (then smallest n0) whose certificate window fits in ``values``.

    Returns ``(-1, -1)`` when nothing can be certified yet.
    """
    n_total = values.shape[0]
    p = 1
    while p + window <= n_total:
        n0 = preperiod_for_np(values, p)
        if n0 + window + p <= n_total:
            return p, n0
        p += 1
    return -1, -1


def member_scan_np(ext: np.ndarray, span: int, max_s: int) -> np.ndarray:
    """mask[s] is True iff ext[n + s] != ext[n] for all 0 <= n < span.

    ``ext`` must hold at least ``span + max_s`` values; mask[0] is False.
    """
    mask = np.zeros(max_s + 1, dtype=bool)
    head = ext[:span]
    for s in range(1, max_s + 1):
        mask[s] = not np.any(ext[s : s + span] == head)
    return mask


# ---------------------------------------------------------------------------
# numba
# ---------------------------------------------------------------------------

if HAVE_NUMBA:

    @njit(cache=True)
    def grundy_fill_nb(moves, values, start):
        n_total = values.shape[0]
        k = moves.shape[0]
        stamp = np.full(k + 2, -1, dtype=np.int64)
        for n in range(start, n_total):
            for j in range(k):
                s = moves[j]
                if s > n:
                    break
                stamp[values[n - s]] = n
            g = 0
            while stamp[g] == n:
                g += 1
            values[n] = g

    @njit(cache=True)
    def preperiod_for_nb(values, p):
        n_total = values.shape[0]
        n = n_total - p - 1
        while n >= 0:
            if values[n + p] != values[n]:
                return n + 1
            n -= 1
        return 0

    @njit(cache=True)
    def find_period_nb(values, window):
        n_total = values.shape[0]
        p = 1
        while p + window <= n_total:
            n0 = preperiod_for_nb(values, p)
            if n0 + window + p <= n_total:
                return p, n0
            p += 1
        return -1, -1

    @njit(cache=True)
    def member_scan_nb(ext, span, max_s):
        mask = np.zeros(max_s + 1, dtype=np.bool_)
        for s in range(1, max_s + 1):
            ok = True
            for n in range(span):
                if ext[n + s] == ext[n]:
                    ok = False
                    break
            mask[s] = ok
        return mask


if USE_NUMBA:
    grundy_fill = grundy_fill_nb
    preperiod_for = preperiod_for_nb
    find_period = find_period_nb
    member_scan = member_scan_nb
else:
    grundy_fill = grundy_fill_np
    preperiod_for = preperiod_for_np
    find_period = find_period_np
    member_scan = member_scan_np
