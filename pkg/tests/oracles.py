"""Reference computations written without numpy or any package code.

Every test that checks a computed value against a hand-derivable fact goes
through here, so a bug in the kernels cannot hide behind itself.
"""

from __future__ import annotations

from math import gcd
from functools import reduce


def naive_grundy(moves, n_max: int) -> list[int]:
    g: list[int] = []
    for n in range(n_max + 1):
        seen = {g[n - m] for m in moves if m <= n}
        v = 0
        while v in seen:
            v += 1
        g.append(v)
    return g


def naive_period(values: list[int], max_p: int | None = None) -> tuple[int, int]:
    """Minimal (p, n0) such that the second half of ``values`` is p-periodic.

    Only trustworthy when ``values`` is much longer than n0 + p.
    """
    N = len(values)
    half = N // 2
    for p in range(1, (max_p or half) + 1):
        if all(values[n] == values[n + p] for n in range(half, N - p)):
            n0 = half
            while n0 > 0 and values[n0 - 1] == values[n0 - 1 + p]:
                n0 -= 1
            return p, n0
    raise AssertionError("no period found; lengthen the prefix")


def naive_member(values: list[int], s: int) -> bool:
    return all(values[n + s] != values[n] for n in range(len(values) - s))


def set_gcd(moves) -> int:
    return reduce(gcd, moves)


def two_move_closed_form(a: int, b: int) -> list[int]:
    """One period of S(a, b) built by string concatenation."""
    s, r = divmod(b, a)
    if s % 2 == 0:
        out = ([0] * a + [1] * a) * (s // 2) + [0] * r + [2] * (a - r) + [1] * r
    else:
        out = ([0] * a + [1] * a) * ((s + 1) // 2) + [2] * r
    return out
