"""Time the numba kernels against their pure-numpy twins.

    python3 benchmarks/bench_kernels.py [--repeat 5]

Both backends are imported side by side (the env flag only picks the default),
so one process measures both. The first numba call is timed separately since
it includes compilation or a cache load.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from subgames import _kernels as K
from subgames.core import SubtractionSet, grundy_prefix, analyze


def _best(fn, repeat: int) -> float:
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def cases():
    moves = np.array([3, 5, 9, 17], dtype=np.int64)
    fill_n = 1 << 20

    def fill(kernel):
        def run():
            vals = np.zeros(fill_n, dtype=np.uint8)
            kernel(moves, vals, 0)
        return run

    # a long period makes the search walk many candidate p
    seq = grundy_prefix(SubtractionSet((5, 23, 28)), 1 << 14).values

    ana = analyze(SubtractionSet((3, 11, 15)))
    span = ana.preperiod + ana.period
    ext = ana.extended(span + 2000)

    yield "grundy_fill 2^20, S(3,5,9,17)", fill(K.grundy_fill_np), fill(getattr(K, "grundy_fill_nb", None))
    yield "find_period S(5,23,28)", lambda: K.find_period_np(seq, 28), (
        (lambda: K.find_period_nb(seq, 28)) if K.HAVE_NUMBA else None
    )
    yield "member_scan s<=2000", lambda: K.member_scan_np(ext, span, 2000), (
        (lambda: K.member_scan_nb(ext, span, 2000)) if K.HAVE_NUMBA else None
    )


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    print(f"default backend: {K.BACKEND}")
    print(f"{'kernel':<34} {'numpy s':>10} {'numba s':>10} {'first':>8} {'speedup':>8}")
    for name, np_fn, nb_fn in cases():
        t_np = _best(np_fn, args.repeat)
        if nb_fn is None or not K.HAVE_NUMBA:
            print(f"{name:<34} {t_np:10.4f} {'-':>10} {'-':>8} {'-':>8}")
            continue
        t0 = time.perf_counter()
        nb_fn()
        first = time.perf_counter() - t0
        t_nb = _best(nb_fn, args.repeat)
        print(f"{name:<34} {t_np:10.4f} {t_nb:10.4f} {first:8.3f} {t_np / t_nb:7.1f}x")


if __name__ == "__main__":
    main()
