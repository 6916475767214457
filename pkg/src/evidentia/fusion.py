"""Combination of bodies of evidence.

Both rules share the conjunctive double sum over pairs of focal elements.
Dempster's rule renormalizes by the non-conflicting mass; Smets' rule keeps
the conflict on EMPTY.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Sequence

from . import errors
from .core import (
    EMPTY,
    THETA,
    BodyOfEvidence,
    Focal,
    Label,
    Mass,
    Regime,
    _build,
    meet,
)


class Rule(str, enum.Enum):
    DEMPSTER = "dempster"
    SMETS = "smets"


@dataclass(frozen=True)
class CombinationReport:
    result: BodyOfEvidence
    conflict: Mass
    rule: Rule


def _same_frame(a: BodyOfEvidence, b: BodyOfEvidence):
    if a.frame != b.frame:
        raise errors.FrameMismatch("cannot combine bodies on different frames")


def _conjunctive(a: BodyOfEvidence, b: BodyOfEvidence) -> dict[Focal, Mass]:
    out: dict[Focal, Mass] = {}
    for x, mx in a.masses.items():
        for y, my in b.masses.items():
            c = meet(x, y)
            out[c] = out.get(c, 0) + mx * my
    return out


def _zero(*bodies: BodyOfEvidence) -> Mass:
    return Fraction(0) if all(b.exact for b in bodies) else 0.0


def conflict_mass(a: BodyOfEvidence, b: BodyOfEvidence) -> Mass:
    """Mass the two bodies jointly put on EMPTY (the pairwise conflict)."""
    _same_frame(a, b)
    total = _zero(a, b)
    for x, mx in a.masses.items():
        for y, my in b.masses.items():
            if meet(x, y) is EMPTY:
                total += mx * my
    return total


def combine_dempster(a: BodyOfEvidence, b: BodyOfEvidence) -> CombinationReport:
    """Dempster's normalized rule; inputs must be in the closed regime."""
    _same_frame(a, b)
    if a.regime is not Regime.CLOSED or b.regime is not Regime.CLOSED:
        raise errors.RegimeMismatch("Dempster's rule needs closed-regime bodies")
    joint = _conjunctive(a, b)
    conflict = joint.pop(EMPTY, _zero(a, b))
    if not any(joint.values()):
        raise errors.TotalConflict("the bodies contradict each other completely")
    scale = 1 - conflict
    masses = {f: m / scale for f, m in joint.items()}
    return CombinationReport(_build(a.frame, masses, Regime.CLOSED), conflict, Rule.DEMPSTER)


def combine_smets(a: BodyOfEvidence, b: BodyOfEvidence) -> CombinationReport:
    """Smets' unnormalized rule; conflict accumulates on EMPTY."""
    _same_frame(a, b)
    joint = _conjunctive(a, b)
    conflict = joint.get(EMPTY, _zero(a, b))
    return CombinationReport(_build(a.frame, joint, Regime.OPEN_TBM), conflict, Rule.SMETS)


_PAIRWISE = {Rule.DEMPSTER: combine_dempster, Rule.SMETS: combine_smets}


def combine(a: BodyOfEvidence, b: BodyOfEvidence, rule: Rule | str = Rule.SMETS) -> CombinationReport:
    return _PAIRWISE[Rule(rule)](a, b)


def combine_all(rule: Rule | str, bodies: Sequence[BodyOfEvidence]) -> CombinationReport:
    """Left fold of the pairwise rule over ``bodies``.

    The reported conflict is cumulative: ``1 - prod(1 - K_i)`` over the
    Dempster steps, or the final EMPTY mass for Smets.
    """
    rule = Rule(rule)
    bodies = list(bodies)
    if not bodies:
        raise errors.EmptyList("nothing to combine")
    for b in bodies[1:]:
        _same_frame(bodies[0], b)
    pairwise = _PAIRWISE[rule]
    if rule is Rule.DEMPSTER:
        kept = 1 - _zero(*bodies)

        def step(acc, b):
            nonlocal kept
            rep = pairwise(acc, b)
            kept *= 1 - rep.conflict
            return rep.result

        if bodies[0].regime is not Regime.CLOSED:
            raise errors.RegimeMismatch("Dempster's rule needs closed-regime bodies")
        result = reduce(step, bodies[1:], bodies[0])
        return CombinationReport(result, 1 - kept, rule)
    result = reduce(lambda acc, b: pairwise(acc, b).result, bodies[1:], bodies[0])
    return CombinationReport(result, result.masses.get(EMPTY, _zero(*bodies)), rule)


def discount(boe: BodyOfEvidence, reliability: Mass) -> BodyOfEvidence:
    """Classical reliability discounting.

    Subset masses are scaled by ``reliability``; the remainder goes to THETA,
    so ``m(THETA)`` becomes ``1 - a + a * m(THETA)``.
    """
    if boe.regime is not Regime.CLOSED:
        raise errors.RegimeMismatch("discounting is defined for closed-regime bodies only")
    if isinstance(reliability, bool) or not 0 <= reliability <= 1:
        raise errors.AlphaOutOfRange(f"reliability must lie in [0, 1], got {reliability}")
    alpha = reliability if isinstance(reliability, float) else Fraction(reliability)
    masses: dict[Focal, Mass] = {}
    for f, m in boe.masses.items():
        if isinstance(f, Label):
            continue
        masses[f] = alpha * m
    masses[THETA] = 1 - alpha + alpha * boe.masses.get(THETA, 0)
    return _build(boe.frame, masses, Regime.CLOSED)
