"""Nim-sequences of subtraction games and certificates of ultimate periodicity."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import reduce
from typing import Iterable, Optional

import numpy as np

from . import _kernels

DEFAULT_MAX_HORIZON = 1 << 22
MEMORY_BUDGET = 1 << 28  # values; one byte each
MAX_MOVES = 255


class SubgamesError(Exception):
    """Base class for errors raised by this package."""


class ResourceLimitError(SubgamesError):
    """A requested horizon does not fit in the configured memory budget."""


class HorizonExhausted(SubgamesError):
    """No period certificate was found before the horizon cap.

    The partial sequence computed so far is kept on ``sequence``.
    """

    def __init__(self, message: str, sequence: "GrundySequence"):
        super().__init__(message)
        self.sequence = sequence


class InvariantViolation(SubgamesError, AssertionError):
    """A law that holds for every subtraction game failed on computed data."""


@dataclass(frozen=True)
class SubtractionSet:
    """Strictly increasing tuple of positive move sizes."""

    moves: tuple[int, ...]

    def __post_init__(self):
        moves = tuple(int(s) for s in self.moves)
        object.__setattr__(self, "moves", moves)
        if not moves:
            raise ValueError("a subtraction set needs at least one move")
        if moves[0] < 1:
            raise ValueError(f"moves must be positive, got {moves}")
        if any(b <= a for a, b in zip(moves, moves[1:])):
            raise ValueError(f"moves must be strictly increasing, got {moves}")
        if len(moves) > MAX_MOVES:
            raise ValueError(f"at most {MAX_MOVES} moves are supported")

    @classmethod
    def of(cls, moves: Iterable[int]) -> "SubtractionSet":
        """Build from any iterable: sorts and drops duplicates."""
        return cls(tuple(sorted(set(int(s) for s in moves))))

    @property
    def k(self) -> int:
        return len(self.moves)

    @property
    def gcd(self) -> int:
        return reduce(math.gcd, self.moves)

    @property
    def normalized(self) -> bool:
        return self.gcd == 1

    @property
    def s1(self) -> int:
        return self.moves[0]

    @property
    def sk(self) -> int:
        return self.moves[-1]

    def __iter__(self):
        return iter(self.moves)

    def __contains__(self, s) -> bool:
        return s in self.moves

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.moves)) + "}"


@dataclass(frozen=True, eq=False)
class GrundySequence:
    """Nim-values G(0), ..., G(horizon) of ``game``."""

    game: SubtractionSet
    values: np.ndarray

    @property
    def horizon(self) -> int:
        return self.values.shape[0] - 1

    def __len__(self) -> int:
        return self.values.shape[0]

    def __getitem__(self, n):
        return self.values[n]

    def tolist(self) -> list[int]:
        return self.values.tolist()


@dataclass(frozen=True)
class PeriodCertificate:
    """``G(n + period) == G(n)`` for all ``n >= preperiod``.

    Proven by checking the window ``[preperiod, preperiod + window_length)``
    with ``window_length = s_k``.
    """

    period: int
    preperiod: int
    window_length: int
    minimal: bool = True

    @property
    def verified_window_start(self) -> int:
        return self.preperiod


@dataclass(frozen=True)
class ParitySequence:
    """V(n) = 0 if G(n) = 0 else 1, with its own eventual period."""

    values: np.ndarray
    period: int
    preperiod: int


@dataclass(frozen=True, eq=False)
class Analysis:
    sequence: GrundySequence
    certificate: PeriodCertificate
    stretch: int = 1

    @property
    def game(self) -> SubtractionSet:
        return self.sequence.game

    @property
    def period(self) -> int:
        return self.certificate.period

    @property
    def preperiod(self) -> int:
        return self.certificate.preperiod

    def value(self, n: int) -> int:
        """G(n) for any n >= 0, using the certificate past the horizon."""
        if n < len(self.sequence):
            return int(self.sequence.values[n])
        n0, p = self.preperiod, self.period
        return int(self.sequence.values[n0 + (n - n0) % p])

    def extended(self, length: int) -> np.ndarray:
        """G(0), ..., G(length - 1) as an array."""
        vals = self.sequence.values
        if length <= vals.shape[0]:
            return vals[:length]
        n0, p = self.preperiod, self.period
        idx = np.arange(length)
        tail = idx >= vals.shape[0]
        idx[tail] = n0 + (idx[tail] - n0) % p
        return vals[idx]

    def tail(self) -> np.ndarray:
        """One period of the periodic part, starting at the pre-period."""
        return self.extended(self.preperiod + self.period)[self.preperiod :]


def mex(values: Iterable[int]) -> int:
    """Least non-negative integer not in ``values``."""
    seen = set(values)
    g = 0
    while g in seen:
        g += 1
    return g


def _check_budget(n_values: int, budget: int) -> None:
    if n_values > budget:
        raise ResourceLimitError(f"{n_values} values exceed the memory budget of {budget}")


def grundy_prefix(game: SubtractionSet, horizon: int, *, budget: int = MEMORY_BUDGET) -> GrundySequence:
    """Nim-values of ``game`` for piles 0..horizon."""
    if horizon < 0:
        raise ValueError("horizon must be >= 0")
    _check_budget(horizon + 1, budget)
    values = np.zeros(horizon + 1, dtype=np.uint8)
    _kernels.grundy_fill(np.asarray(game.moves, dtype=np.int64), values, 0)
    values.flags.writeable = False
    return GrundySequence(game, values)


def extend_prefix(seq: GrundySequence, horizon: int, *, budget: int = MEMORY_BUDGET) -> GrundySequence:
    """Same sequence continued to ``horizon``, reusing computed values."""
    if horizon <= seq.horizon:
        return seq
    _check_budget(horizon + 1, budget)
    values = np.zeros(horizon + 1, dtype=np.uint8)
    values[: len(seq)] = seq.values
    _kernels.grundy_fill(np.asarray(seq.game.moves, dtype=np.int64), values, len(seq))
    values.flags.writeable = False
    return GrundySequence(seq.game, values)


def normalize(game: SubtractionSet) -> tuple[SubtractionSet, int]:
    g = game.gcd
    if g == 1:
        return game, 1
    return SubtractionSet(tuple(s // g for s in game.moves)), g


def lift(seq: GrundySequence, g: int, n: int) -> int:
    """G of the game stretched by ``g`` at pile ``n``.

    ``seq`` is the sequence of the normalized game; G_S(n) = G_{S/g}(n // g).
    """
    m = n // g
    if m > seq.horizon:
        raise IndexError(f"pile {n} needs index {m} beyond horizon {seq.horizon}")
    return int(seq.values[m])


def lift_sequence(seq: GrundySequence, game: SubtractionSet, g: int) -> GrundySequence:
    """Whole lifted prefix of ``game`` (whose moves are ``g`` times those of ``seq.game``)."""
    values = np.repeat(seq.values, g)
    values.flags.writeable = False
    return GrundySequence(game, values)


def find_certificate(seq: GrundySequence) -> Optional[PeriodCertificate]:
    """Minimal (period, pre-period) certified by an s_k-long window, or None.

    The period is minimized first, then the pre-period. Besides the window the
    whole computed prefix past ``n0`` must be ``p``-periodic.
    """
    if len(seq) == 0:
        raise ValueError("empty sequence")
    sk = seq.game.sk
    p, n0 = _kernels.find_period(seq.values, sk)
    if p < 0:
        return None
    return PeriodCertificate(period=int(p), preperiod=int(n0), window_length=sk)


def check_ferguson(seq: GrundySequence) -> bool:
    """G(n) = 0 iff G(n + s1) = 1 at every index the prefix covers."""
    s1 = seq.game.s1
    v = seq.values
    if v.shape[0] <= s1:
        return True
    return bool(np.array_equal(v[:-s1] == 0, v[s1:] == 1))


def default_initial_horizon(game: SubtractionSet) -> int:
    return max(256, 8 * game.sk)


def analyze(
    game: SubtractionSet,
    initial_horizon: Optional[int] = None,
    max_horizon: int = DEFAULT_MAX_HORIZON,
) -> Analysis:
    """Grow the horizon by doubling until a period certificate is found.

    Non-normalized games are computed on the normalized set and lifted.
    Ferguson's property is asserted on every computed prefix.
    """
    base, g = normalize(game)
    horizon = initial_horizon if initial_horizon is not None else default_initial_horizon(game)
    horizon = max(horizon, 1)
    seq = None
    while True:
        capped = min(horizon, max_horizon)
        n_base = capped // g
        seq = grundy_prefix(base, n_base) if seq is None else extend_prefix(seq, n_base)
        full = seq if g == 1 else lift_sequence(seq, game, g)
        if not check_ferguson(full):
            raise InvariantViolation(f"Ferguson's property fails for {game}")
        cert = find_certificate(full)
        if cert is not None:
            return Analysis(full, cert, stretch=g)
        if capped >= max_horizon:
            raise HorizonExhausted(
                f"no period certificate for {game} within horizon {full.horizon}", full
            )
        horizon *= 2


def _divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def parity_analysis(analysis: Analysis) -> ParitySequence:
    """Collapse nim-values to 0 / non-zero and find that sequence's period."""
    n0, p = analysis.preperiod, analysis.period
    ext = (analysis.extended(n0 + 2 * p) != 0).astype(np.uint8)
    for d in _divisors(p):
        if np.array_equal(ext[n0 + d : n0 + d + p], ext[n0 : n0 + p]):
            head = ext[: n0 + p + d]
            m = int(_kernels.preperiod_for(head, d))
            values = (analysis.sequence.values != 0).astype(np.uint8)
            values.flags.writeable = False
            return ParitySequence(values, d, m)
    raise AssertionError("unreachable: p itself is a period of V")
