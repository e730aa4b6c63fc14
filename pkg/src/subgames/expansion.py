"""Expansion sets: every s with G(n + s) != G(n) for all n >= 0.

Once the game is periodic from n0 with period p, membership of s only needs
n in [0, n0 + p), and membership itself is p-periodic for s >= n0. So a
finite window decides the whole (infinite) expansion.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

from . import _kernels
from .core import Analysis, PeriodCertificate, SubtractionSet

EQUAL_S = "non-expandable-equal-S"
EQUAL_S_STAR = "non-expandable-equal-S*p"
EXPANDABLE = "expandable"


def _reduce(s: int, n0: int, p: int) -> int:
    """Representative of s in (n0, n0 + p] with the same membership."""
    if s <= n0 + p:
        return s
    return n0 + 1 + (s - n0 - 1) % p


def member_mask(analysis: Analysis, max_s: int) -> np.ndarray:
    """mask[s] for 0 <= s <= max_s; mask[0] is always False."""
    span = analysis.preperiod + analysis.period
    ext = analysis.extended(span + max_s)
    return _kernels.member_scan(ext, span, max_s)


def is_member(analysis: Analysis, s: int) -> bool:
    if s < 1:
        raise ValueError("s must be positive")
    n0, p = analysis.preperiod, analysis.period
    s = _reduce(s, n0, p)
    span = n0 + p
    ext = analysis.extended(span + s)
    return not bool(np.any(ext[s : s + span] == ext[:span]))


@functools.lru_cache(maxsize=64)
def _plain_sequence(moves: tuple[int, ...], horizon: int) -> tuple[int, ...]:
    g: list[int] = []
    for n in range(horizon + 1):
        reach = {g[n - m] for m in moves if m <= n}
        v = 0
        while v in reach:
            v += 1
        g.append(v)
    return tuple(g)


def brute_force_member(game: SubtractionSet, s: int, horizon: int) -> bool:
    """Raw check of G(n + s) != G(n) for all n <= horizon - s.

    Recomputes the nim-sequence with a plain Python loop so that it shares no
    code with the kernels. Meant as a test oracle.
    """
    g = _plain_sequence(game.moves, horizon)
    return all(g[n + s] != g[n] for n in range(horizon - s + 1))


def star_closure_contains(base: Iterable[int], p: int, s: int) -> bool:
    """Is s in {t + m*p : t in base, m >= 0}?"""
    return any(t <= s and (s - t) % p == 0 for t in base)


@dataclass(frozen=True)
class ExpansionReport:
    game: SubtractionSet
    certificate: PeriodCertificate
    window_end: int
    window_members: tuple[int, ...]
    base: tuple[int, ...]
    generators: tuple[int, ...]
    classification: str
    rendered: str
    star_inclusion: bool

    @property
    def period(self) -> int:
        return self.certificate.period

    @property
    def preperiod(self) -> int:
        return self.certificate.preperiod

    def __contains__(self, s: int) -> bool:
        if s < 1:
            return False
        return _reduce(s, self.preperiod, self.period) in self.window_members

    def indicator(self, bound: int) -> np.ndarray:
        """Membership of 0, 1, ..., bound as a boolean array."""
        n0, p = self.preperiod, self.period
        window = np.zeros(self.window_end + 1, dtype=bool)
        window[list(self.window_members)] = True
        s = np.arange(bound + 1)
        far = s > n0 + p
        s[far] = n0 + 1 + (s[far] - n0 - 1) % p
        return window[s]

    def members_upto(self, bound: int) -> list[int]:
        return np.flatnonzero(self.indicator(bound)).tolist()

    @property
    def tail_rule(self) -> str:
        return f"for s > {self.preperiod}: s in S^ex iff s - {self.period} in S^ex"


def star_indicator(base: Iterable[int], p: int, bound: int) -> np.ndarray:
    """Membership of 0..bound in {t + m*p : t in base, m >= 0}."""
    s = np.arange(bound + 1)
    out = np.zeros(bound + 1, dtype=bool)
    for t in base:
        out |= (s >= t) & ((s - t) % p == 0)
    return out


def _fmt(xs: Iterable[int]) -> str:
    return "{" + ",".join(str(x) for x in xs) + "}"


def render(base: Iterable[int], generators: Iterable[int], p: int) -> str:
    base, generators = list(base), list(generators)
    parts = []
    if base:
        parts.append(_fmt(base))
    if generators:
        parts.append(_fmt(generators) + f"^{{*{p}}}")
    return " ∪ ".join(parts) if parts else "{}"


def _split_chains(mask: np.ndarray, n0: int, p: int, limit: int) -> tuple[list[int], list[int]]:
    """Split members in [1, limit] into finite ones and chain generators.

    ``mask`` must cover indices up to ``max(limit, n0 + p)``.
    """
    inf = mask.copy()
    for s in range(min(n0, inf.shape[0] - p) - 1, -1, -1):
        inf[s] = mask[s] and inf[s + p]
    inf[0] = False
    s = np.arange(1, limit + 1)
    members = mask[1 : limit + 1]
    chained = inf[1 : limit + 1]
    prev = np.zeros(limit, dtype=bool)
    if p < limit:
        prev[p:] = chained[:-p]
    base = s[members & ~chained]
    gens = s[chained & ~prev]
    return base.tolist(), gens.tolist()


def full_report(analysis: Analysis) -> ExpansionReport:
    game = analysis.game
    n0, p = analysis.preperiod, analysis.period
    limit = max(n0, game.sk) + p
    mask = member_mask(analysis, limit + p)
    window_end = n0 + p
    members = tuple(np.flatnonzero(mask[1 : window_end + 1]) + 1)

    ex = mask[1 : limit + 1]
    s_ind = np.zeros(limit + 1, dtype=bool)
    s_ind[list(game.moves)] = True
    s_ind = s_ind[1:]
    star_ind = star_indicator(game.moves, p, limit)[1:]
    base, gens = _split_chains(mask, n0, p, limit)
    if np.array_equal(ex, s_ind):
        label = EQUAL_S
    elif np.array_equal(ex, star_ind):
        label = EQUAL_S_STAR
    else:
        label = EXPANDABLE
    return ExpansionReport(
        game=game,
        certificate=analysis.certificate,
        window_end=window_end,
        window_members=tuple(int(x) for x in members),
        base=tuple(base),
        generators=tuple(gens),
        classification=label,
        rendered=render(base, gens, p),
        star_inclusion=bool(np.all(ex[star_ind])),
    )


def classify(report: ExpansionReport) -> str:
    return report.classification


def non_expandable(report: ExpansionReport) -> bool:
    return report.classification != EXPANDABLE


@dataclass(frozen=True)
class ExpansionPrediction:
    """A member set ``base ∪ generators^{*star}`` or the non-expandable claim."""

    base: tuple[int, ...] = ()
    generators: tuple[int, ...] = ()
    star: Optional[int] = None
    non_expandable: bool = False

    def __post_init__(self):
        object.__setattr__(self, "base", tuple(sorted(set(self.base))))
        object.__setattr__(self, "generators", tuple(sorted(set(self.generators))))
        if self.generators and not self.star:
            raise ValueError("generators need a star period")

    def __contains__(self, s: int) -> bool:
        if s in self.base:
            return True
        return bool(self.generators) and star_closure_contains(self.generators, self.star, s)

    def render(self) -> str:
        if self.non_expandable:
            return "non-expandable"
        return render(self.base, self.generators, self.star or 0)

    def indicator(self, bound: int) -> np.ndarray:
        out = np.zeros(bound + 1, dtype=bool)
        out[[b for b in self.base if b <= bound]] = True
        if self.generators:
            out |= star_indicator(self.generators, self.star, bound)
        return out

    def matches(self, report: ExpansionReport) -> bool:
        if self.non_expandable:
            return non_expandable(report)
        top = max((*self.base, *self.generators, report.preperiod, report.game.sk))
        bound = top + math.lcm(report.period, self.star or 1)
        return bool(np.array_equal(report.indicator(bound)[1:], self.indicator(bound)[1:]))


NON_EXPANDABLE = ExpansionPrediction(non_expandable=True)


def finite(*members: int) -> ExpansionPrediction:
    return ExpansionPrediction(base=members)


def starred(generators: Iterable[int], star: int, base: Iterable[int] = ()) -> ExpansionPrediction:
    return ExpansionPrediction(base=tuple(base), generators=tuple(generators), star=star)
