"""Belief and plausibility in three regimes.

``LITERAL``
    Bel sums subset focals contained in H; Pl sums subset focals meeting H
    plus ``m(THETA)``.  ``Bel(THETA) = Pl(THETA) = 1``, ``Bel(EMPTY) =
    Pl(EMPTY) = 0``.
``TABLE``
    Only for named possibilities.  Pl sums subset focals contained in H; Bel
    keeps those that are not also contained in some other named possibility.
    THETA counts toward neither.  This is the convention under which the
    two-amino-acid codon walkthrough comes out as tabulated.
``TBM``
    Literal rule for proper hypotheses; the THETA and EMPTY labels evaluate
    to their own masses.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from . import errors
from .core import EMPTY, THETA, BodyOfEvidence, Label, Mass, is_subset

INDIFFERENCE_TOL = 1e-12


class EvalMode(str, enum.Enum):
    LITERAL = "literal"
    TABLE = "table"
    TBM = "tbm"


class Preference(str, enum.Enum):
    FIRST = "first"
    SECOND = "second"
    INDIFFERENT = "indifferent"


@dataclass(frozen=True)
class EvalResult:
    belief: Mass
    plausibility: Mass
    mode: EvalMode


def _resolve(boe: BodyOfEvidence, h):
    frame = boe.frame
    if isinstance(h, Label):
        return h
    if isinstance(h, str):
        if not frame.has_possibility(h):
            raise errors.HypothesisOutsideFrame(f"no possibility named {h!r}")
        return frame.possibility(h)
    try:
        return frame.check_mask(h)
    except errors.ValidationError as exc:
        raise errors.HypothesisOutsideFrame(str(exc)) from None


def interval(boe: BodyOfEvidence, h, mode: EvalMode | str = EvalMode.LITERAL) -> EvalResult:
    """Belief and plausibility of ``h`` from one pass over the focal elements.

    ``h`` is a possibility name, a bitmask, or (outside table mode) one of
    the THETA/EMPTY labels.
    """
    mode = EvalMode(mode)
    target = _resolve(boe, h)
    one, zero = (Fraction(1), Fraction(0)) if boe.exact else (1.0, 0.0)

    if isinstance(target, Label):
        if mode is EvalMode.TABLE:
            raise errors.TableModeOnUnnamedHypothesis("table mode evaluates named possibilities only")
        if mode is EvalMode.TBM:
            m = boe.masses.get(target, zero)
            return EvalResult(m, m, mode)
        return EvalResult(one, one, mode) if target is THETA else EvalResult(zero, zero, mode)

    bel = pl = zero
    if mode is EvalMode.TABLE:
        masks = [m for _, m in boe.frame.possibilities]
        if target not in masks:
            raise errors.TableModeOnUnnamedHypothesis("table mode evaluates named possibilities only")
        others = [m for m in masks if m != target]
        for f, m in boe.masses.items():
            if isinstance(f, Label) or not is_subset(f, target):
                continue
            pl += m
            if not any(is_subset(f, o) for o in others):
                bel += m
        return EvalResult(bel, pl, mode)

    for f, m in boe.masses.items():
        if f is THETA:
            pl += m
        elif f is EMPTY:
            continue
        elif f & target:
            pl += m
            if is_subset(f, target):
                bel += m
    return EvalResult(bel, pl, mode)


def belief(boe: BodyOfEvidence, h, mode: EvalMode | str = EvalMode.LITERAL) -> Mass:
    return interval(boe, h, mode).belief


def plausibility(boe: BodyOfEvidence, h, mode: EvalMode | str = EvalMode.LITERAL) -> Mass:
    return interval(boe, h, mode).plausibility


def compare_hypotheses(boe, h1, h2, criterion: str = "belief", mode=EvalMode.LITERAL) -> Preference:
    """Rank two hypotheses by belief or plausibility.

    ``criterion`` is ``"belief"`` or ``"plausibility"``.  Float values within
    ``INDIFFERENCE_TOL`` of each other are a tie.
    """
    if criterion not in ("belief", "plausibility"):
        raise ValueError(f"criterion must be 'belief' or 'plausibility', got {criterion!r}")
    r1, r2 = interval(boe, h1, mode), interval(boe, h2, mode)
    v1, v2 = getattr(r1, criterion), getattr(r2, criterion)
    tol = 0 if boe.exact else INDIFFERENCE_TOL
    if abs(v1 - v2) <= tol:
        return Preference.INDIFFERENT
    return Preference.FIRST if v1 > v2 else Preference.SECOND
