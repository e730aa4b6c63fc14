from __future__ import annotations

import itertools
import math

import pytest

from oracles import naive_grundy, naive_member, naive_period
from subgames.core import SubtractionSet
from subgames.scanner import (
    C1,
    C2,
    KEVEN,
    enumerate_sets,
    keven_games,
    period_relation,
    replay,
    scan_conjecture1,
    scan_conjecture2,
    scan_keven_claim,
)


def moves(stream):
    return [g.moves for g in stream]


def test_enumerate_examples():
    assert moves(enumerate_sets(2, 3)) == [(1, 2), (1, 3), (2, 3)]
    assert moves(enumerate_sets(3, 4)) == [(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)]
    assert (2, 4, 6) not in moves(enumerate_sets(3, 6))
    with pytest.raises(ValueError):
        list(enumerate_sets(3, 2))


@pytest.mark.parametrize("bound", [10, 21, 30])
def test_enumeration_count(bound):
    count = 0
    for a in range(1, bound + 1):
        for b in range(a + 1, bound + 1):
            for c in range(b + 1, bound + 1):
                if math.gcd(math.gcd(a, b), c) == 1:
                    count += 1
    assert sum(1 for _ in enumerate_sets(3, bound)) == count


def test_empty_stream():
    r = scan_conjecture1([])
    assert r.examined == 0 and r.total == 0 and not r.counterexamples


def test_c2_examples():
    r = scan_conjecture2([SubtractionSet((1, 2, 3)), SubtractionSet((2, 3))])
    assert r.examined == 2 and not r.counterexamples


def test_c2_small_scan():
    r = scan_conjecture2(enumerate_sets(3, 20))
    assert r.examined == r.total and not r.counterexamples and not r.skipped


def test_c1_listed_games_not_counterexamples():
    games = [SubtractionSet(m) for m in [(3, 5, 9), (3, 5, 17), (5, 11, 15), (5, 7, 13)]]
    r = scan_conjecture1(games)
    assert r.examined == 4 and not r.counterexamples
    assert sorted(r.details["ultimately_bipartite"]) == sorted(list(g.moves) for g in games)


def test_c1_scan_to_21_finds_replayable_counterexamples():
    r = scan_conjecture1(enumerate_sets(3, 21))
    found = [tuple(c["game"]) for c in r.counterexamples]
    assert found == [(3, 11, 15), (3, 13, 15), (3, 17, 21), (3, 19, 21)]
    for entry in r.counterexamples:
        assert replay(C1, entry)
        g = entry["game"]
        s = entry["evidence"]["s"]
        direct = naive_grundy(g, 3000)
        # ultimately 0101..., the extra move never repeats a value, and adding it
        # to the set leaves the whole sequence unchanged
        assert naive_period(direct) == (2, entry["evidence"]["preperiod"])
        assert naive_member(direct, s) and s not in g
        assert naive_grundy(sorted(g + [s]), 3000) == direct
        # S^ex also differs from S^{*2} at the reported witness
        t = entry["evidence"]["star_witness"]
        in_star = any(m <= t and (t - m) % 2 == 0 for m in g)
        assert naive_member(direct, t) == entry["evidence"]["star_witness_in_expansion"] != in_star
    assert not r.details["purely_bipartite_counterexamples"]


def test_scan_skips_exhausted_games():
    r = scan_conjecture2([SubtractionSet((1, 2)), SubtractionSet((1, 60))], max_horizon=64)
    assert r.examined == 1 and r.skipped == [{"game": [1, 60], "reason": "horizon-exhausted at 64"}]
    assert r.total == 2


def test_scan_determinism():
    a = scan_conjecture1(enumerate_sets(3, 18)).to_dict()
    b = scan_conjecture1(enumerate_sets(3, 18)).to_dict()
    a.pop("wall_time"), b.pop("wall_time")
    assert a == b


def test_keven_games():
    games = keven_games([2, 3], [2, 4])
    assert (2, 2, 1, 5) in games and (3, 2, 1, 7) in games and (2, 4, 1, 9) in games
    assert all(math.gcd(a, b) == 1 and k % 2 == 0 and 0 <= r < a for a, k, r, b in games)


@pytest.mark.parametrize("a, b, claimed", [(2, 5, 22), (3, 7, 45), (2, 9, 38)])
def test_keven_examples(a, b, claimed):
    r = scan_keven_claim([a], [b // a])
    row = next(x for x in r.details["rows"] if x["b"] == b)
    assert row["claimed_period"] == claimed
    p, n0 = naive_period(naive_grundy((a, b, a + b), 6 * claimed))
    assert (row["period"], row["preperiod"]) == (p, n0)
    assert row["relation"] == period_relation(p, claimed)


def test_period_relation():
    assert period_relation(5, 5) == "equal"
    assert period_relation(5, 10) == "proper-divisor"
    assert period_relation(4, 10) == "mismatch"


def test_replay_rejects_fabricated():
    fake = {"game": [1, 3, 5], "evidence": {"s": 2}}
    assert not replay(C1, fake)
    assert not replay(C2, {"game": [2, 3], "evidence": {"period": 5, "parity_period": 1}})
    assert not replay(KEVEN, {"game": [2, 5, 7], "evidence": {"claimed_period": 22, "period": 22}})
    with pytest.raises(ValueError):
        replay("C9", fake)
