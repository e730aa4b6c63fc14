"""Compare catalog predictions with computed analyses."""

from __future__ import annotations

import itertools
import math
from dataclasses import asdict, dataclass, field
from typing import Iterable, Mapping, Optional

import numpy as np

from .catalog import TheoremPrediction, family, predict
from .core import (
    DEFAULT_MAX_HORIZON,
    Analysis,
    SubgamesError,
    SubtractionSet,
    analyze,
    extend_prefix,
    grundy_prefix,
    lift_sequence,
    normalize,
)
from .expansion import full_report
from .patterns import InadmissibleParameters


@dataclass
class Verdict:
    family: str
    params: dict[str, int]
    moves: tuple[int, ...]
    predicted_period: int
    period: Optional[int] = None
    preperiod: Optional[int] = None
    period_match: Optional[bool] = None
    period_divides: Optional[bool] = None
    sequence_match: Optional[bool] = None
    aligned_start: Optional[int] = None
    first_divergence: Optional[int] = None
    predicted_preperiod: Optional[int] = None
    preperiod_match: Optional[bool] = None
    predicted_expansion: Optional[str] = None
    computed_expansion: Optional[str] = None
    expansion_match: Optional[bool] = None
    expansion_readings: dict[str, bool] = field(default_factory=dict)
    error: Optional[str] = None
    notes: list[str] = field(default_factory=list)

    @property
    def all_match(self) -> bool:
        flags = (self.period_match, self.sequence_match, self.expansion_match, self.preperiod_match)
        return self.error is None and all(f is not False for f in flags)

    @property
    def core_match(self) -> bool:
        """Period and sequence only."""
        return self.error is None and self.period_match is not False and self.sequence_match is not False

    def to_dict(self) -> dict:
        d = asdict(self)
        d["moves"] = list(self.moves)
        d["all_match"] = self.all_match
        return d


def aligned_start(analysis: Analysis, pattern: Iterable[int]) -> Optional[int]:
    """Least n* where G(n*), G(n*+1), ... repeats ``pattern`` from its first symbol.

    Returns None when the eventual tail is not a repetition of ``pattern``.
    """
    pat = np.asarray(list(pattern), dtype=np.uint8)
    P = pat.shape[0]
    n0, p = analysis.preperiod, analysis.period
    span = math.lcm(p, P)
    tail = analysis.extended(n0 + span)[n0:]
    reps = span // P + 2
    phase = np.tile(pat, reps).tobytes().find(tail.tobytes())
    if phase < 0:
        return None
    phase %= P
    # G(n) = pat[(n - n0 + phase) % P] for n >= n0; extend backwards
    m = n0
    vals = analysis.sequence.values
    while m > 0 and vals[m - 1] == pat[(m - 1 - n0 + phase) % P]:
        m -= 1
    return m + (-(m - n0 + phase)) % P


def first_divergence(analysis: Analysis, pattern: Iterable[int]) -> int:
    """First n with G(n) != pattern[n mod P], the pattern anchored at pile 0."""
    pat = np.asarray(list(pattern), dtype=np.uint8)
    n0, p = analysis.preperiod, analysis.period
    span = n0 + math.lcm(p, pat.shape[0])
    vals = analysis.extended(span)
    want = np.resize(pat, span)
    bad = np.flatnonzero(vals != want)
    return int(bad[0]) if bad.size else -1


def verify(
    family_id: str,
    params: Mapping[str, int],
    *,
    initial_horizon: Optional[int] = None,
    max_horizon: int = DEFAULT_MAX_HORIZON,
    analysis: Optional[Analysis] = None,
) -> Verdict:
    pred = predict(family_id, params)
    fam = family(family_id)
    verdict = Verdict(pred.family, dict(pred.params), pred.moves, pred.period)
    if analysis is None:
        analysis = analyze(SubtractionSet.of(pred.moves), initial_horizon, max_horizon)
    p, n0 = analysis.period, analysis.preperiod
    verdict.period, verdict.preperiod = p, n0
    verdict.period_match = p == pred.period
    verdict.period_divides = pred.period % p == 0
    if not verdict.period_match:
        rel = "divides" if verdict.period_divides else "does not divide"
        verdict.notes.append(f"computed period {p} {rel} stated period {pred.period}")

    if pred.values is not None:
        # the alignment must sit in the first half of actually computed values
        need = 2 * (n0 + len(pred.values))
        if analysis.sequence.horizon < need:
            seq = extend_prefix(analysis.sequence, need) if analysis.stretch == 1 else None
            if seq is None:
                base, g = normalize(analysis.game)
                seq = lift_sequence(grundy_prefix(base, need // g + 1), analysis.game, g)
            analysis = Analysis(seq, analysis.certificate, analysis.stretch)
        start = aligned_start(analysis, pred.values)
        verdict.sequence_match = start is not None and start <= analysis.sequence.horizon // 2
        verdict.aligned_start = start
        if not verdict.sequence_match:
            verdict.first_divergence = first_divergence(analysis, pred.values)
        elif start > 0 and not fam.ultimately:
            verdict.notes.append(f"stated as periodic but the pattern only aligns from n={start}")
    for text in fam.errata:
        verdict.notes.append("erratum: " + text)

    if pred.preperiod is not None:
        verdict.predicted_preperiod = pred.preperiod
        verdict.preperiod_match = n0 == pred.preperiod
        if not verdict.preperiod_match:
            verdict.notes.append(f"computed pre-period {n0}, stated {pred.preperiod}")

    if pred.expansion:
        report = full_report(analysis)
        verdict.computed_expansion = f"{report.rendered} [{report.classification}]"
        verdict.predicted_expansion = pred.expansion_text
        for reading in pred.expansion:
            verdict.expansion_readings[reading.label] = reading.prediction.matches(report)
        verdict.expansion_match = verdict.expansion_readings[pred.expansion[0].label]
    return verdict


def admissible_tuples(family_id: str, ranges: Mapping[str, Iterable[int]]) -> list[dict[str, int]]:
    fam = family(family_id)
    missing = [p for p in fam.params if p not in ranges]
    if missing:
        raise InadmissibleParameters(f"{fam.id} needs ranges for {', '.join(missing)}")
    out = []
    for combo in itertools.product(*(sorted(ranges[p]) for p in fam.params)):
        q = dict(zip(fam.params, combo))
        try:
            fam.check(q)
        except InadmissibleParameters:
            continue
        out.append(q)
    return out


def _verify_one(job) -> Verdict:
    family_id, q, initial_horizon, max_horizon = job
    try:
        return verify(family_id, q, initial_horizon=initial_horizon, max_horizon=max_horizon)
    except SubgamesError as exc:
        pred = predict(family_id, q)
        return Verdict(pred.family, dict(pred.params), pred.moves, pred.period, error=str(exc))


def sweep(
    family_id: str,
    ranges: Mapping[str, Iterable[int]],
    *,
    initial_horizon: Optional[int] = None,
    max_horizon: int = DEFAULT_MAX_HORIZON,
    workers: int = 1,
) -> list[Verdict]:
    """One verdict per admissible tuple, in lexicographic parameter order."""
    jobs = [(family_id, q, initial_horizon, max_horizon) for q in admissible_tuples(family_id, ranges)]
    if workers > 1 and len(jobs) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(workers) as pool:
            return list(pool.map(_verify_one, jobs, chunksize=16))
    return [_verify_one(j) for j in jobs]
