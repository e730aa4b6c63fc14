"""Bulk analyses over enumerated subtraction sets, looking for counterexamples.

Three scans:

* ``c1``: ultimately bipartite games should have non-expandable sets.
* ``c2``: G and its zero/non-zero collapse V should share the same period.
* ``keven``: S(a, b, a+b) with b = ka + r, k even, is claimed to have
  period (2b + r)a.
"""

from __future__ import annotations

import itertools
import math
import time
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterable, Iterator, Optional

import numpy as np

from .bipartite import PURELY, ULTIMATELY, observed_bipartite
from .core import (
    DEFAULT_MAX_HORIZON,
    Analysis,
    HorizonExhausted,
    SubtractionSet,
    analyze,
    parity_analysis,
)
from .expansion import EXPANDABLE, full_report, star_indicator

C1, C2, KEVEN = "C1", "C2", "KEVEN"


@dataclass
class ConjectureReport:
    conjecture: str
    bounds: dict
    examined: int = 0
    counterexamples: list[dict] = field(default_factory=list)
    skipped: list[dict] = field(default_factory=list)
    wall_time: float = 0.0
    # scan-specific detail: purely bipartite games for C1, per-game rows for KEVEN
    details: dict = field(default_factory=dict)

    @property
    def total(self) -> int:
        return self.examined + len(self.skipped)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["total"] = self.total
        return d


def enumerate_sets(k: int, max_sk: int) -> Iterator[SubtractionSet]:
    """All normalized k-sets with largest move <= max_sk, lexicographically."""
    if k < 1 or max_sk < k:
        raise ValueError("need k >= 1 and max_sk >= k")
    for combo in itertools.combinations(range(1, max_sk + 1), k):
        if math.gcd(*combo) == 1:
            yield SubtractionSet(combo)


def _analyze_all(
    stream: Iterable[SubtractionSet],
    work: Callable[[Analysis], Optional[dict]],
    report: ConjectureReport,
    initial_horizon: Optional[int],
    max_horizon: int,
) -> ConjectureReport:
    t0 = time.perf_counter()
    for game in stream:
        try:
            analysis = analyze(game, initial_horizon, max_horizon)
        except HorizonExhausted as exc:
            report.skipped.append(
                {"game": list(game.moves), "reason": f"horizon-exhausted at {exc.sequence.horizon}"}
            )
            continue
        report.examined += 1
        evidence = work(analysis)
        if evidence is not None:
            report.counterexamples.append({"game": list(game.moves), "evidence": evidence})
    report.wall_time = time.perf_counter() - t0
    return report


def c1_evidence(analysis: Analysis) -> Optional[dict]:
    """Evidence against the non-expandability of an ultimately bipartite game.

    ``s`` is a member of S^ex outside S; ``star_witness`` is the least t on
    which S^ex and S^{*p} disagree, with ``star_witness_in_expansion`` telling
    which side it belongs to.
    """
    report = full_report(analysis)
    if report.classification != EXPANDABLE:
        return None
    game, p = analysis.game, analysis.period
    bound = max(analysis.preperiod, game.sk) + p
    ex = report.indicator(bound)
    star = star_indicator(game.moves, p, bound)
    extra = [s for s in np.flatnonzero(ex).tolist() if s not in game]
    diff = np.flatnonzero(ex[1:] != star[1:]) + 1
    t = int(diff[0])
    return {
        "s": extra[0] if extra else None,
        "star_witness": t,
        "star_witness_in_expansion": bool(ex[t]),
        "expansion": report.rendered,
        "period": p,
        "preperiod": analysis.preperiod,
    }


def scan_conjecture1(
    stream: Iterable[SubtractionSet],
    *,
    initial_horizon: Optional[int] = None,
    max_horizon: int = DEFAULT_MAX_HORIZON,
    bounds: Optional[dict] = None,
) -> ConjectureReport:
    """Counterexamples are expandable, ultimately (not purely) bipartite games.

    Purely bipartite games are listed under ``details`` together with the
    outcome of the same test on them, the looser reading of the conjecture.
    """
    report = ConjectureReport(C1, bounds or {})
    purely: list[list[int]] = []
    ultimately: list[list[int]] = []
    loose: list[dict] = []

    def work(analysis: Analysis) -> Optional[dict]:
        kind = observed_bipartite(analysis)
        if kind == PURELY:
            purely.append(list(analysis.game.moves))
            ev = c1_evidence(analysis)
            if ev is not None:
                loose.append({"game": list(analysis.game.moves), "evidence": ev})
            return None
        if kind != ULTIMATELY:
            return None
        ultimately.append(list(analysis.game.moves))
        return c1_evidence(analysis)

    _analyze_all(stream, work, report, initial_horizon, max_horizon)
    report.details = {
        "ultimately_bipartite": ultimately,
        "purely_bipartite": purely,
        "purely_bipartite_counterexamples": loose,
    }
    return report


def c2_evidence(analysis: Analysis) -> Optional[dict]:
    parity = parity_analysis(analysis)
    if parity.period == analysis.period:
        return None
    return {
        "period": analysis.period,
        "parity_period": parity.period,
        "preperiod": analysis.preperiod,
        "parity_preperiod": parity.preperiod,
    }


def scan_conjecture2(
    stream: Iterable[SubtractionSet],
    *,
    initial_horizon: Optional[int] = None,
    max_horizon: int = DEFAULT_MAX_HORIZON,
    bounds: Optional[dict] = None,
) -> ConjectureReport:
    report = ConjectureReport(C2, bounds or {})
    return _analyze_all(stream, c2_evidence, report, initial_horizon, max_horizon)


def keven_games(a_values: Iterable[int], k_values: Iterable[int]) -> list[tuple[int, int, int, int]]:
    """(a, k, r, b) with b = ka + r, k even, 0 <= r < a, gcd(a, b) = 1."""
    out = []
    for a in sorted(a_values):
        for k in sorted(k_values):
            if a < 2 or k < 2 or k % 2:
                continue
            for r in range(a):
                b = k * a + r
                if math.gcd(a, b) == 1:
                    out.append((a, k, r, b))
    return out


def period_relation(computed: int, claimed: int) -> str:
    if computed == claimed:
        return "equal"
    if claimed % computed == 0:
        return "proper-divisor"
    return "mismatch"


def scan_keven_claim(
    a_values: Iterable[int],
    k_values: Iterable[int],
    *,
    initial_horizon: Optional[int] = None,
    max_horizon: int = DEFAULT_MAX_HORIZON,
) -> ConjectureReport:
    """Counterexamples are games whose period does not divide (2b + r)a."""
    a_values, k_values = list(a_values), list(k_values)
    report = ConjectureReport(KEVEN, {"a": sorted(a_values), "k": sorted(k_values)})
    rows: list[dict] = []
    t0 = time.perf_counter()
    for a, k, r, b in keven_games(a_values, k_values):
        game = SubtractionSet((a, b, a + b))
        claimed = (2 * b + r) * a
        try:
            analysis = analyze(game, initial_horizon, max_horizon)
        except HorizonExhausted as exc:
            report.skipped.append(
                {"game": list(game.moves), "reason": f"horizon-exhausted at {exc.sequence.horizon}"}
            )
            continue
        report.examined += 1
        relation = period_relation(analysis.period, claimed)
        row = {
            "a": a, "k": k, "r": r, "b": b,
            "game": list(game.moves),
            "claimed_period": claimed,
            "period": analysis.period,
            "preperiod": analysis.preperiod,
            "relation": relation,
        }
        rows.append(row)
        if relation == "mismatch":
            report.counterexamples.append(
                {"game": list(game.moves), "evidence": {"claimed_period": claimed, "period": analysis.period}}
            )
    report.wall_time = time.perf_counter() - t0
    report.details = {"rows": rows}
    return report


def replay(conjecture: str, entry: dict, **kw) -> bool:
    """Re-run the analysis behind a counterexample; True if it still violates."""
    game = SubtractionSet(tuple(entry["game"]))
    analysis = analyze(game, **kw)
    if conjecture == C1:
        ev = c1_evidence(analysis)
        return (
            ev is not None
            and observed_bipartite(analysis) == ULTIMATELY
            and ev["s"] == entry["evidence"]["s"]
            and ev["star_witness"] == entry["evidence"]["star_witness"]
        )
    if conjecture == C2:
        ev = c2_evidence(analysis)
        return ev == entry["evidence"]
    if conjecture == KEVEN:
        claimed = entry["evidence"]["claimed_period"]
        return (
            analysis.period == entry["evidence"]["period"]
            and period_relation(analysis.period, claimed) == "mismatch"
        )
    raise ValueError(f"unknown conjecture {conjecture!r}")
