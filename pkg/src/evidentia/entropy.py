"""Generalized entropy of a body of evidence.

For each named possibility A with belief b and plausibility p::

    H = -sum(p * log2(p) / exp(p - b)) + sum(p - b)

The first sum is the conflict term and reduces to Shannon entropy when the
possibilities are disjoint singletons carrying a probability vector.  The
second sum is the ambiguity term.  ``0 * log2(0)`` is taken as 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from . import errors
from .core import FLOAT_TOL, BodyOfEvidence, Mass
from .evaluation import EvalMode, interval


@dataclass(frozen=True)
class PossibilityTerms:
    belief: Mass
    plausibility: Mass
    conflict: float
    ambiguity: Mass


@dataclass(frozen=True)
class EntropyReport:
    total: float
    conflict_term: float
    ambiguity_term: Mass
    per_possibility: Mapping[str, PossibilityTerms]
    mode: EvalMode


def _conflict_part(bel, pl) -> float:
    if pl <= 0:
        return 0.0
    p = float(pl)
    return -p * math.log2(p) / math.exp(float(pl - bel))


def entropy(boe: BodyOfEvidence, mode: EvalMode | str = EvalMode.LITERAL) -> EntropyReport:
    mode = EvalMode(mode)
    if not boe.frame.possibilities:
        raise errors.NoNamedPossibilities("entropy is summed over named possibilities")
    per = {}
    for name in boe.frame.names:
        r = interval(boe, name, mode)
        gap = r.plausibility - r.belief
        per[name] = PossibilityTerms(r.belief, r.plausibility, _conflict_part(r.belief, r.plausibility), gap)
    conflict = math.fsum(t.conflict for t in per.values())
    gaps = [t.ambiguity for t in per.values()]
    amb = sum(gaps, Fraction(0)) if boe.exact else math.fsum(gaps)
    return EntropyReport(conflict + float(amb), conflict, amb, per, mode)


def ambiguity(boe: BodyOfEvidence, mode: EvalMode | str = EvalMode.LITERAL) -> Mass:
    """The ambiguity term alone; exact in rational mode."""
    return entropy(boe, mode).ambiguity_term


def shannon(p: Sequence[float]) -> float:
    """Shannon entropy in bits."""
    p = list(p)
    if not p or any(x < 0 for x in p) or abs(math.fsum(float(x) for x in p) - 1.0) > FLOAT_TOL:
        raise errors.NotAProbabilityVector(f"not a probability vector: {p}")
    return -math.fsum(float(x) * math.log2(float(x)) for x in p if x > 0)
