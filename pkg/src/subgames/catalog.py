"""Closed-form families of subtraction games and their stated behaviour.

Each family maps parameters to a move set and to the claimed period,
one-period nim-pattern, pre-period (rarely stated) and expansion. Where a
stated pattern is internally inconsistent with the stated period, the
family keeps the literal text in ``verbatim_pattern`` and the corrected
pattern in ``pattern``; see ``errata``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Mapping, Optional

from .expansion import NON_EXPANDABLE, ExpansionPrediction, finite, starred
from .patterns import InadmissibleParameters, SequencePattern, expand_pattern, parse_pattern

Params = Mapping[str, int]


@dataclass(frozen=True)
class Reading:
    """One way to read a stated expansion; ``label`` names the reading."""

    label: str
    prediction: ExpansionPrediction


@dataclass(frozen=True)
class Family:
    id: str
    game_form: str
    params: tuple[str, ...]
    constraints: str
    source: str
    admissible: Callable[[Params], bool] = field(repr=False)
    moves: Callable[[Params], tuple[int, ...]] = field(repr=False)
    period: Callable[[Params], int] = field(repr=False)
    pattern: Callable[[Params], Optional[str]] = field(repr=False)
    expansion: Callable[[Params], list[Reading]] = field(repr=False, default=lambda q: [])
    preperiod: Callable[[Params], Optional[int]] = field(repr=False, default=lambda q: None)
    # extra pattern symbols computed from the parameters, e.g. b = s*a + r
    derived: Callable[[Params], dict[str, int]] = field(repr=False, default=lambda q: {})
    verbatim_pattern: Optional[str] = None
    verbatim_period: Optional[str] = None
    errata: tuple[str, ...] = ()
    ultimately: bool = False
    # families whose stated expansion has more than one plausible reading
    ambiguous_expansion: bool = False

    def check(self, params: Params) -> dict[str, int]:
        missing = [p for p in self.params if p not in params]
        extra = [p for p in params if p not in self.params]
        if missing or extra:
            raise InadmissibleParameters(
                f"{self.id} takes parameters {', '.join(self.params)}; got {sorted(params)}"
            )
        q = {p: int(params[p]) for p in self.params}
        if not self.admissible(q):
            raise InadmissibleParameters(f"{self.id} needs {self.constraints}; got {q}")
        return q


@dataclass(frozen=True)
class TheoremPrediction:
    family: str
    params: dict[str, int]
    moves: tuple[int, ...]
    period: int
    preperiod: Optional[int]
    pattern: Optional[str]
    values: Optional[tuple[int, ...]]
    expansion: tuple[Reading, ...]
    constraints: str

    @property
    def expansion_text(self) -> Optional[str]:
        if not self.expansion:
            return None
        return self.expansion[0].prediction.render()


def _even(x: int) -> bool:
    return x % 2 == 0


def _odd(x: int) -> bool:
    return x % 2 == 1


def _rng(lo: int, hi: int, step: int = 1) -> list[int]:
    return list(range(lo, hi + 1, step))


def _odd_multiples(a: int, k: int, offset: int = 0) -> list[int]:
    return [offset + s * a for s in range(1, k + 1, 2)]


def _two_move_pattern(q: Params) -> str:
    if _even(q["b"] // q["a"]):
        return "(0^a1^a)^{s/2} 0^r2^{a-r} 1^r"
    return "(0^a1^a)^{(s+1)/2} 2^r"


def _quotient(q: Params) -> dict[str, int]:
    s, r = divmod(q["b"], q["a"])
    return {"s": s, "k": s, "r": r}


def _two_move_ok(q: Params) -> bool:
    a, b = q["a"], q["b"]
    return 1 <= a < b and math.gcd(a, b) == 1 and (a > 1 or _even(b))


def _two_move_expansion(q: Params) -> list[Reading]:
    a, b = q["a"], q["b"]
    if a + 1 < b <= 2 * a:
        return [Reading("stated", starred(_rng(a, b), a + b))]
    return [Reading("stated", NON_EXPANDABLE)]


def _f21_ok(q: Params) -> bool:
    a, b = q["a"], q["b"]
    return 2 <= a < b and _odd(b // a)


def _f21_expansion(q: Params) -> list[Reading]:
    a, b = q["a"], q["b"]
    k, r = divmod(b, a)
    if r == 0:
        return []
    gens = _odd_multiples(a, k) + _rng(k * a + 1, b + a) + _odd_multiples(a, k, offset=b)
    return [Reading("stated", starred(gens, b + (k + 1) * a))]


def _f22_pattern(q: Params) -> str:
    if _even(q["k"]):
        return "(0^a1^a)^{k/2} 0^r2^{a-r} 1^r"
    return "(0^a1^a)^{(k+1)/2} 2^r"


def _f23_pattern(q: Params) -> str:
    if _even(q["k"]):
        return "((0^a1^a)^{k/2} 0^r2^{a-r} 1^r)^2 3^{a-r} 0^r 2^{a-r} 1^r"
    return "((0^a1^a)^{(k+1)/2} 2^r)^2 0^{a-r} 3^r 1^{a-r} 2^r"


def _f10_expansion(q: Params) -> list[Reading]:
    a = q["a"]
    if a == 4:
        return [Reading("stated", NON_EXPANDABLE)]
    base, gens, p = [1, a, 3 * a - 2, 3 * a], [4 * a - 1, 6 * a - 1], 3 * a - 1
    return [
        Reading("star-on-second-set", starred(gens, p, base=base)),
        Reading("star-on-union", starred(base + gens, p)),
    ]


def _finite_or_star(members: list[int], p: int) -> list[Reading]:
    return [Reading("finite-as-written", finite(*members)), Reading("star-closure", starred(members, p))]


def _f11_expansion(q: Params) -> list[Reading]:
    a, r = q["a"], q["r"]
    if r == 2:
        return [Reading("stated", NON_EXPANDABLE)]
    members = [1, a, 2 * a + r, 2 * a + r + 2, 3 * a + r + 1, 5 * a + 2 * r + 2]
    return _finite_or_star(members, 3 * a + r)


def _f16_expansion(q: Params) -> list[Reading]:
    a, r = q["a"], q["r"]
    gens = [1, 2, a + 2, 3 * a + r - 2, 3 * a + r, 4 * a + r - 1]
    if r == 6:
        gens.append(2 * a + 3)
    p = 4 * a + r
    return [
        Reading("as-written", starred(gens, p)),
        Reading("2-read-as-a", starred([a if g == 2 else g for g in gens], p)),
    ]


def _f19_expansion(q: Params) -> list[Reading]:
    a = q["a"]
    r = a - 3
    if r == 3:
        return [Reading("stated", NON_EXPANDABLE)]
    return _finite_or_star([1, a, 4 * a - 3, 4 * a - 1, 5 * a - 2, 9 * a - 4], 4 * a - 2)


def _f20_expansion(q: Params) -> list[Reading]:
    a, r = q["a"], q["r"]
    if r == 3:
        return [Reading("stated", NON_EXPANDABLE)]
    members = [1, a, 3 * a + r, 3 * a + r + 2, 4 * a + r + 1, 7 * a + 2 * r + 2]
    return _finite_or_star(members, 4 * a + r)


def _stated(pred: ExpansionPrediction) -> list[Reading]:
    return [Reading("stated", pred)]


_FAMILIES: list[Family] = [
    Family(
        "F1", "S(a,b)", ("a", "b"), "gcd(a,b)=1, a<b, b even if a=1",
        "two-move games, closed form by the parity of s = b div a",
        _two_move_ok, lambda q: (q["a"], q["b"]), lambda q: q["a"] + q["b"], _two_move_pattern,
        derived=_quotient,
    ),
    Family(
        "F2", "S(a,b)", ("a", "b"), "gcd(a,b)=1, a<b, b even if a=1",
        "two-move games, expansion {a..b}^{*(a+b)} when a+1<b<=2a, else non-expandable",
        _two_move_ok, lambda q: (q["a"], q["b"]), lambda q: q["a"] + q["b"], _two_move_pattern,
        _two_move_expansion, derived=_quotient,
    ),
    Family(
        "F3", "S(1,a,b)", ("a", "b"), "1<a<b, a and b odd",
        "bipartite characterization: 1 in S and all moves odd",
        lambda q: 1 < q["a"] < q["b"] and _odd(q["a"]) and _odd(q["b"]),
        lambda q: (1, q["a"], q["b"]), lambda q: 2, lambda q: "01",
        lambda q: _stated(starred([1], 2)),
    ),
    Family(
        "F4", "S(1,a,b)", ("a", "b"), "a odd, b even, a<b",
        "S(1,a,b) with a odd and b even",
        lambda q: _odd(q["a"]) and _even(q["b"]) and 0 < q["a"] < q["b"],
        lambda q: tuple(sorted({1, q["a"], q["b"]})), lambda q: q["a"] + q["b"],
        lambda q: "(01)^{b/2} (23)^{(a-1)/2} 2",
        lambda q: _stated(starred(
            _rng(1, q["a"], 2) + _rng(q["b"], q["b"] + q["a"] - 1, 2), q["a"] + q["b"]
        )),
    ),
    Family(
        "F5", "S(1,a,a+r)", ("a", "r"), "a, r even, 0<r<a",
        "S(1,a,a+r) with a and r even",
        lambda q: _even(q["a"]) and _even(q["r"]) and 0 < q["r"] < q["a"],
        lambda q: (1, q["a"], q["a"] + q["r"]), lambda q: 2 * q["a"] + q["r"],
        lambda q: "(01)^{a/2} 2 (01)^{a/2} (23)^{r/2-1} 2",
        lambda q: _stated(starred(
            [1] + _rng(q["a"], q["a"] + q["r"], 2) + [2 * q["a"] + q["r"] - 1], 2 * q["a"] + q["r"]
        )),
    ),
    Family(
        "F6", "S(1,a,a+1)", ("a",), "a >= 2 even",
        "S(1,a,a+1), a even: sequence and expansion",
        lambda q: q["a"] >= 2 and _even(q["a"]),
        lambda q: (1, q["a"], q["a"] + 1), lambda q: 2 * q["a"],
        lambda q: "(01)^{a/2} (23)^{a/2}",
        lambda q: _stated(starred(
            _rng(1, q["a"] - 1, 2) + [q["a"]] + _rng(q["a"] + 1, 2 * q["a"] - 1, 2), 2 * q["a"]
        )),
    ),
    Family(
        "F7", "S(1,a,2a-1)", ("a",), "a = r+1 with r >= 3 odd (a >= 4 even)",
        "S(1,a,a+r) with r odd and a = r+1",
        lambda q: q["a"] >= 4 and _even(q["a"]),
        lambda q: (1, q["a"], 2 * q["a"] - 1), lambda q: 2 * q["a"],
        lambda q: "(01)^{a/2} 2 (01)^{(a-2)/2} 2",
        lambda q: _stated(NON_EXPANDABLE),
    ),
    Family(
        "F8", "S(1,a,a+r)", ("a", "r"), "r >= 3 odd, a >= r+3 even",
        "S(1,a,a+r) with r odd and a >= r+3",
        lambda q: q["r"] >= 3 and _odd(q["r"]) and _even(q["a"]) and q["a"] >= q["r"] + 3,
        lambda q: (1, q["a"], q["a"] + q["r"]), lambda q: 2 * q["a"] + q["r"],
        lambda q: "(01)^{(r+1)/2} 2 (01)^{(a-2)/2} 2 (01)^{(r+1)/2} (23)^{(a-r-3)/2} 2",
        lambda q: _stated(starred(
            [q["a"] + q["r"] + 2, 2 * q["a"] + q["r"] + 1, 3 * q["a"] + q["r"]],
            2 * q["a"] + q["r"], base=[1, q["a"], q["a"] + q["r"]],
        )),
        ultimately=True,
    ),
    Family(
        "F9", "S(1,a,2a)", ("a",), "a >= 2 even",
        "S(1,a,2a)",
        lambda q: q["a"] >= 2 and _even(q["a"]),
        lambda q: (1, q["a"], 2 * q["a"]), lambda q: 3 * q["a"],
        lambda q: "(01)^{a/2} 2 (01)^{a/2} (23)^{(a-2)/2} 2",
        lambda q: _stated(starred([1] + _rng(q["a"], 2 * q["a"], 2) + [3 * q["a"] - 1], 3 * q["a"])),
    ),
    Family(
        "F10", "S(1,a,3a-2)", ("a",), "a >= 4 even",
        "S(1,a,2a+r) with a = r+2",
        lambda q: q["a"] >= 4 and _even(q["a"]),
        lambda q: (1, q["a"], 3 * q["a"] - 2), lambda q: 3 * q["a"] - 1,
        lambda q: "(01)^{a/2-1} 2 (01)^{a/2} 2 (01)^{a/2-1} 2",
        _f10_expansion, ultimately=True, ambiguous_expansion=True,
    ),
    Family(
        "F11", "S(1,a,2a+r)", ("a", "r"), "r >= 2 even, a >= r+4 even",
        "S(1,a,2a+r) with r even and a >= r+4",
        lambda q: q["r"] >= 2 and _even(q["r"]) and _even(q["a"]) and q["a"] >= q["r"] + 4,
        lambda q: (1, q["a"], 2 * q["a"] + q["r"]), lambda q: 3 * q["a"] + q["r"],
        lambda q: "(01)^{r/2+1} 2 ((01)^{a/2-1} 2)^2 (01)^{r/2+1} (23)^{(a-r)/2-2} 2",
        _f11_expansion, ultimately=True, ambiguous_expansion=True,
    ),
    Family(
        "F12", "S(1,a,2a+1)", ("a",), "a >= 2 even",
        "S(1,a,2a+1)",
        lambda q: q["a"] >= 2 and _even(q["a"]),
        lambda q: (1, q["a"], 2 * q["a"] + 1), lambda q: q["a"] + 1,
        lambda q: "(01)^{a/2} 2",
        lambda q: _stated(NON_EXPANDABLE),
    ),
    Family(
        "F13", "S(1,a,2a+r)", ("a", "r"), "r >= 3 odd, a >= r+1 even",
        "S(1,a,2a+r) with r odd, r >= 3",
        lambda q: q["r"] >= 3 and _odd(q["r"]) and _even(q["a"]) and q["a"] >= q["r"] + 1,
        lambda q: (1, q["a"], 2 * q["a"] + q["r"]), lambda q: 3 * q["a"] + q["r"],
        lambda q: "((01)^{a/2} 2)^2 (01)^{a/2} (23)^{(r-3)/2} 2",
        lambda q: _stated(starred(
            [1, q["a"], q["a"] + 2, 2 * q["a"] + q["r"] - 2, 2 * q["a"] + q["r"], 3 * q["a"] + q["r"] - 1],
            3 * q["a"] + q["r"],
        )),
    ),
    Family(
        "F14", "S(1,a,3a)", ("a",), "a >= 4 even",
        "S(1,a,3a)",
        lambda q: q["a"] >= 4 and _even(q["a"]),
        lambda q: (1, q["a"], 3 * q["a"]), lambda q: 3 * q["a"] + 1,
        lambda q: "((01)^{a/2} 2)^2 (01)^{a/2-1} 2",
        lambda q: _stated(starred([1, q["a"], 2 * q["a"] + 1, 3 * q["a"]], 3 * q["a"] + 1)),
    ),
    Family(
        "F15", "S(1,a,3a+r)", ("a", "r"), "r in {2,4}, a > r even",
        "S(1,a,3a+r), r = 2 or 4: same nim-sequence as S(1,a)",
        lambda q: q["r"] in (2, 4) and _even(q["a"]) and q["a"] > q["r"],
        lambda q: (1, q["a"], 3 * q["a"] + q["r"]), lambda q: q["a"] + 1,
        lambda q: "(01)^{a/2} 2",
    ),
    Family(
        "F16", "S(1,a,3a+r)", ("a", "r"), "a > r >= 6, a and r even",
        "S(1,a,3a+r) with r even, r >= 6",
        lambda q: q["r"] >= 6 and _even(q["r"]) and _even(q["a"]) and q["a"] > q["r"],
        lambda q: (1, q["a"], 3 * q["a"] + q["r"]), lambda q: 4 * q["a"] + q["r"],
        lambda q: "((01)^{a/2} 2)^4 (23)^{r/2-2}",
        _f16_expansion, ambiguous_expansion=True,
        errata=(
            "stated pattern ends (23)^{r/2-2} after four (01)^{a/2} 2 blocks; computed "
            "sequences end ((01)^{a/2} 2)^3 (01)^{a/2} (23)^{r/2-2} 2 (kept as stated)",
        ),
    ),
    Family(
        "F17", "S(1,a,3a+1)", ("a",), "a >= 2 even",
        "S(1,a,3a+1)",
        lambda q: q["a"] >= 2 and _even(q["a"]),
        lambda q: (1, q["a"], 3 * q["a"] + 1), lambda q: 4 * q["a"] + 1,
        lambda q: "((01)^{a/2} 2)^2 (01)^{a/2} (23)^{a/2-1} 2",
        lambda q: _stated(starred(
            [1, q["a"], q["a"] + 2, 3 * q["a"] - 1, 3 * q["a"] + 1, 4 * q["a"]], 4 * q["a"] + 1
        )),
        verbatim_pattern="((01)^{a/2} 2)^3 (23)^{a/2-1} 2",
        errata=(
            "stated pattern has length 4a+2, one more than the stated period 4a+1; "
            "computed sequences show the third (01)^{a/2} block carries no trailing 2",
        ),
    ),
    Family(
        "F18", "S(1,a,4a-1)", ("a",), "a = r+1 with r >= 3 odd (a >= 4 even)",
        "S(1,a,3a+r) with r odd and a = r+1",
        lambda q: q["a"] >= 4 and _even(q["a"]),
        lambda q: (1, q["a"], 4 * q["a"] - 1), lambda q: 4 * q["a"],
        lambda q: "((01)^{a/2-1} 2)^2 ((01)^{a/2} 2)^2",
        lambda q: _stated(NON_EXPANDABLE) if q["a"] == 4 else _stated(
            starred([4 * q["a"] + 1, 5 * q["a"]], 4 * q["a"], base=[1, q["a"], 4 * q["a"] - 1])
        ),
        ultimately=True,
    ),
    Family(
        "F19", "S(1,a,4a-3)", ("a",), "a = r+3 with r >= 3 odd (a >= 6 even)",
        "S(1,a,3a+r) with r odd and a = r+3",
        lambda q: q["a"] >= 6 and _even(q["a"]),
        lambda q: (1, q["a"], 4 * q["a"] - 3), lambda q: 4 * q["a"] - 2,
        lambda q: "((01)^{a/2-1} 2)^3 (01)^{a/2} 2",
        _f19_expansion, ultimately=True, ambiguous_expansion=True,
    ),
    Family(
        "F20", "S(1,a,3a+r)", ("a", "r"), "r >= 3 odd, a >= r+5 even",
        "S(1,a,3a+r) with r odd and a >= r+5",
        lambda q: q["r"] >= 3 and _odd(q["r"]) and _even(q["a"]) and q["a"] >= q["r"] + 5,
        lambda q: (1, q["a"], 3 * q["a"] + q["r"]), lambda q: 4 * q["a"] + q["r"],
        lambda q: "(01)^{(r+3)/2} 2 ((01)^{a/2-1} 2)^3 (01)^{(r+3)/2} (23)^{(a-r-5)/2} 2",
        _f20_expansion, ultimately=True,
        verbatim_period="4a+1",
        errata=(
            "stated period 4a+1 disagrees with the stated pattern, whose length is 4a+r; "
            "computed periods follow the pattern",
        ),
    ),
    Family(
        "F21", "S(a,b,a+b)", ("a", "b"), "2 <= a < b, k = b div a odd",
        "S(a,b,a+b) with b = ka+r, k odd",
        _f21_ok, lambda q: (q["a"], q["b"], q["a"] + q["b"]),
        lambda q: q["b"] + (q["b"] // q["a"] + 1) * q["a"],
        lambda q: "(0^a1^a)^{(k+1)/2} (2^a3^a)^{(k-1)/2} 2^a3^r", _f21_expansion,
        derived=_quotient,
    ),
    Family(
        "F22", "S(a,ka+r,(k+2)a+r)", ("a", "k", "r"), "a >= 2, k >= 1, 0 < r < a",
        "S(a,ka+r,(k+2)a+r)",
        lambda q: q["a"] >= 2 and q["k"] >= 1 and 0 < q["r"] < q["a"],
        lambda q: (q["a"], q["k"] * q["a"] + q["r"], (q["k"] + 2) * q["a"] + q["r"]),
        lambda q: (q["k"] + 1) * q["a"] + q["r"], _f22_pattern,
        lambda q: _stated(NON_EXPANDABLE),
        errata=(
            "at k=1, r>=2 the game has the nim-sequence of S(a,a+r), whose expansion "
            "{a,...,a+r}^{*(2a+r)} is larger than S^{*p}; stated non-expandability fails there",
        ),
    ),
    Family(
        "F23", "S(a,ka+r,(k+4)a+r)", ("a", "k", "r"), "k >= 3, 0 < r < a",
        "S(a,ka+r,(k+4)a+r)",
        lambda q: q["k"] >= 3 and 0 < q["r"] < q["a"],
        lambda q: (q["a"], q["k"] * q["a"] + q["r"], (q["k"] + 4) * q["a"] + q["r"]),
        lambda q: 2 * q["k"] * q["a"] + 4 * q["a"] + 2 * q["r"], _f23_pattern,
        lambda q: _stated(starred(
            [q["a"], q["k"] * q["a"] + q["r"], (q["k"] + 2) * q["a"] + q["r"],
             (q["k"] + 4) * q["a"] + q["r"], (2 * q["k"] + 3) * q["a"] + 2 * q["r"]],
            2 * q["k"] * q["a"] + 4 * q["a"] + 2 * q["r"],
        )),
    ),
    Family(
        "F24", "S(a,ka+1,(k+6)a+1)", ("a", "k"), "a >= 2, k >= 3 odd",
        "S(a,ka+1,(k+6)a+1)",
        lambda q: q["a"] >= 2 and q["k"] >= 3 and _odd(q["k"]),
        lambda q: (q["a"], q["k"] * q["a"] + 1, (q["k"] + 6) * q["a"] + 1),
        lambda q: 2 * q["k"] * q["a"] + 6 * q["a"] + 2,
        lambda q: "((0^a1^a)^{(k+1)/2} 2)^2 (0^{a-1}3 1^{a-1}2)^2",
        lambda q: _stated(starred(
            [q["a"], q["k"] * q["a"] + 1, (q["k"] + 2) * q["a"] + 1, (q["k"] + 4) * q["a"] + 1,
             (q["k"] + 6) * q["a"] + 1, (2 * q["k"] + 5) * q["a"] + 2],
            2 * q["k"] * q["a"] + 6 * q["a"] + 2,
        )),
    ),
    Family(
        "F25", "S(a,2a,3a+1)", ("a",), "a >= 2",
        "S(a,2a,3a+1): pre-period 4a-1, period 3 (a=2) or 4a+1",
        lambda q: q["a"] >= 2,
        lambda q: (q["a"], 2 * q["a"], 3 * q["a"] + 1),
        lambda q: 3 if q["a"] == 2 else 4 * q["a"] + 1,
        lambda q: None if q["a"] == 2 else "1 0^{a-1} 2 1^{a-1} 0 2^{a-1} 1 0 3^{a-2} 2",
        lambda q: _stated(starred([2 * q["a"], 3 * q["a"] + 1, 5 * q["a"]], 4 * q["a"] + 1, base=[q["a"]])),
        preperiod=lambda q: 4 * q["a"] - 1,
        ultimately=True,
        errata=(
            "stated pre-period 4a-1 is the last index where periodicity fails; "
            "the least n0 with G(n+p)=G(n) for all n >= n0 is 4a",
        ),
    ),
    Family(
        "F26", "S(a,2a+1,3a+2)", ("a",), "a >= 2",
        "S(a,2a+1,3a+2)",
        lambda q: q["a"] >= 2,
        lambda q: (q["a"], 2 * q["a"] + 1, 3 * q["a"] + 2), lambda q: 4 * q["a"] + 2,
        lambda q: "0^a 1^a 0 2^{a-1} 10 3^{a-2} 21",
        lambda q: _stated(NON_EXPANDABLE),
    ),
    Family(
        "F27", "S(a,2a+2,3a+3)", ("a",), "a >= 4",
        "S(a,2a+2,3a+3)",
        lambda q: q["a"] >= 4,
        lambda q: (q["a"], 2 * q["a"] + 2, 3 * q["a"] + 3), lambda q: 4 * q["a"] + 3,
        lambda q: "2^{a-2} 11 00 3^{a-4} 22 11 0^{a-1} 2 1^{a-1} 00",
        lambda q: _stated(NON_EXPANDABLE) if q["a"] == 4 else _stated(
            starred([3 * q["a"] + 4], 4 * q["a"] + 3, base=[q["a"], 2 * q["a"] + 2, 3 * q["a"] + 3])
        ),
        ultimately=True,
    ),
    Family(
        "F28", "S(a,2a+1,3a)", ("a",), "odd integer a >= 5",
        "S(a,2a+1,3a) is ultimately bipartite",
        lambda q: q["a"] >= 5 and _odd(q["a"]),
        lambda q: (q["a"], 2 * q["a"] + 1, 3 * q["a"]), lambda q: 2, lambda q: "01",
        ultimately=True,
    ),
]

_BY_ID = {f.id: f for f in _FAMILIES}


def catalog() -> list[Family]:
    return list(_FAMILIES)


def family(family_id: str) -> Family:
    try:
        return _BY_ID[family_id.upper()]
    except KeyError:
        raise InadmissibleParameters(f"unknown family {family_id!r}") from None


def predict(family_id: str, params: Params) -> TheoremPrediction:
    fam = family(family_id)
    q = fam.check(params)
    text = fam.pattern(q)
    values = None
    if text is not None:
        values = tuple(expand_pattern(parse_pattern(text), {**q, **fam.derived(q)}))
    return TheoremPrediction(
        family=fam.id,
        params=q,
        moves=tuple(fam.moves(q)),
        period=fam.period(q),
        preperiod=fam.preperiod(q),
        pattern=text,
        values=values,
        expansion=tuple(fam.expansion(q)),
        constraints=fam.constraints,
    )
