from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import naive_grundy
from subgames.bipartite import (
    NEITHER,
    PURELY,
    ULTIMATELY,
    bipartite_predicate,
    ferguson_check,
    lemma_checks,
    observed_bipartite,
)
from subgames.core import SubtractionSet, analyze


def S(*m):
    return SubtractionSet(m)


@pytest.mark.parametrize("moves, expected", [((1, 3, 5), True), ((1, 3, 4), False), ((3, 5, 9), False)])
def test_predicate(moves, expected):
    assert bipartite_predicate(S(*moves)) is expected


@pytest.mark.parametrize("moves, expected", [((1, 3, 5), PURELY), ((5, 11, 15), ULTIMATELY), ((2, 3), NEITHER)])
def test_observed(moves, expected):
    assert observed_bipartite(analyze(S(*moves))) == expected


@pytest.mark.parametrize("moves", [(2, 3), (1, 3, 4), (3, 5, 9), (2, 4, 7)])
def test_ferguson(moves):
    assert ferguson_check(analyze(S(*moves)))


@pytest.mark.parametrize("moves, n0", [((3, 5, 9), 14), ((3, 5, 17), 30), ((5, 7, 13), 40), ((5, 11, 15), 44)])
def test_boundary_checks(moves, n0):
    f = lemma_checks(analyze(S(*moves)))
    assert f.ultimately and f.preperiod == n0
    assert f.all_hold and None not in f.checks.values()
    g = naive_grundy(moves, n0 + 10)
    sk = moves[-1]
    assert n0 >= moves[0] + sk
    assert g[n0] == 0 and g[n0 - 1] >= 2 and g[n0 - 2] == 0 and g[n0 - 1 - sk] == 1


def test_checks_inapplicable():
    f = lemma_checks(analyze(S(1, 3, 5)))
    assert f.purely and all(v is None for v in f.checks.values()) and f.all_hold
    f = lemma_checks(analyze(S(2, 3)))
    assert f.observed == NEITHER and all(v is None for v in f.checks.values())


@given(st.lists(st.integers(1, 21), min_size=1, max_size=3, unique=True).map(SubtractionSet.of))
@settings(max_examples=200)
def test_bipartite_biconditional(game):
    if not game.normalized:
        return
    assert bipartite_predicate(game) == (observed_bipartite(analyze(game)) == PURELY)
