"""Bipartite and ultimately bipartite games.

A game is bipartite when its nim-sequence is 0101... from pile 0, and
ultimately bipartite when the sequence settles into 0101... after a
pre-period. For the latter, the values just before the pre-period and the
size of any expansion member are tightly constrained; ``lemma_checks``
evaluates each of those constraints separately.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import Analysis, SubtractionSet, check_ferguson
from .expansion import ExpansionReport, full_report

PURELY = "purely"
ULTIMATELY = "ultimately"
NEITHER = "neither"


def bipartite_predicate(game: SubtractionSet) -> bool:
    """1 is a move and every move is odd."""
    return 1 in game and all(s % 2 == 1 for s in game)


def observed_bipartite(analysis: Analysis) -> str:
    if analysis.period != 2 or set(analysis.tail().tolist()) != {0, 1}:
        return NEITHER
    if analysis.preperiod == 0:
        return PURELY
    return ULTIMATELY


def ferguson_check(analysis: Analysis) -> bool:
    return check_ferguson(analysis.sequence)


@dataclass(frozen=True)
class BipartiteFinding:
    game: SubtractionSet
    predicate: bool
    observed: str
    preperiod: int
    # None marks a check whose precondition does not hold
    n0_at_least_s1_plus_sk: Optional[bool] = None
    g_n0_is_0: Optional[bool] = None
    g_n0_minus_1_at_least_2: Optional[bool] = None
    g_n0_minus_2_is_0: Optional[bool] = None
    g_n0_minus_1_minus_sk_is_1: Optional[bool] = None
    expansion_within_sk: Optional[bool] = None

    @property
    def purely(self) -> bool:
        return self.observed == PURELY

    @property
    def ultimately(self) -> bool:
        return self.observed == ULTIMATELY

    @property
    def checks(self) -> dict[str, Optional[bool]]:
        return {
            "n0_at_least_s1_plus_sk": self.n0_at_least_s1_plus_sk,
            "g_n0_is_0": self.g_n0_is_0,
            "g_n0_minus_1_at_least_2": self.g_n0_minus_1_at_least_2,
            "g_n0_minus_2_is_0": self.g_n0_minus_2_is_0,
            "g_n0_minus_1_minus_sk_is_1": self.g_n0_minus_1_minus_sk_is_1,
            "expansion_within_sk": self.expansion_within_sk,
        }

    @property
    def all_hold(self) -> bool:
        return all(v is not False for v in self.checks.values())


def lemma_checks(analysis: Analysis, report: Optional[ExpansionReport] = None) -> BipartiteFinding:
    game = analysis.game
    n0 = analysis.preperiod
    observed = observed_bipartite(analysis)
    fields = {}
    if observed == ULTIMATELY and n0 > 0:
        g = analysis.value
        sk = game.sk
        fields["n0_at_least_s1_plus_sk"] = n0 >= game.s1 + sk
        fields["g_n0_is_0"] = g(n0) == 0
        fields["g_n0_minus_1_at_least_2"] = g(n0 - 1) >= 2
        fields["g_n0_minus_2_is_0"] = n0 >= 2 and g(n0 - 2) == 0
        fields["g_n0_minus_1_minus_sk_is_1"] = n0 - 1 - sk >= 0 and g(n0 - 1 - sk) == 1
    if observed == ULTIMATELY and not bipartite_predicate(game):
        if report is None:
            report = full_report(analysis)
        fields["expansion_within_sk"] = all(s <= game.sk for s in report.window_members)
    return BipartiteFinding(game, bipartite_predicate(game), observed, n0, **fields)
