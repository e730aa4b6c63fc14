"""Subtraction games: nim-sequences, periodicity certificates and expansions."""

from ._kernels import BACKEND
from .core import (
    Analysis,
    GrundySequence,
    HorizonExhausted,
    InvariantViolation,
    ParitySequence,
    PeriodCertificate,
    ResourceLimitError,
    SubgamesError,
    SubtractionSet,
    analyze,
    find_certificate,
    grundy_prefix,
    lift,
    mex,
    normalize,
    parity_analysis,
)

__all__ = [
    "BACKEND",
    "Analysis",
    "GrundySequence",
    "HorizonExhausted",
    "InvariantViolation",
    "ParitySequence",
    "PeriodCertificate",
    "ResourceLimitError",
    "SubgamesError",
    "SubtractionSet",
    "analyze",
    "find_certificate",
    "grundy_prefix",
    "lift",
    "mex",
    "normalize",
    "parity_analysis",
]
