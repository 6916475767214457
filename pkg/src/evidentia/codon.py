"""Codon decoding as sequential evidence fusion.

A :class:`GeneticCode` attaches a closed-regime body of evidence to every
(position, nucleotide) cell.  Decoding a codon combines the three bodies its
nucleotides select, in arrival order, and evaluates every amino acid after
each arrival.  Ambiguous codons are resolved stochastically by
:func:`translate`, and :func:`evolve_code` runs a greedy first-improvement
descent of the mean codon entropy over a discrete move set.
"""

from __future__ import annotations

import itertools
import math
import random
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from types import MappingProxyType
from typing import Mapping, Sequence

from . import errors
from .core import THETA, BodyOfEvidence, Frame, Label, Regime, _build, new_frame
from .entropy import entropy
from .evaluation import INDIFFERENCE_TOL, EvalMode, EvalResult, interval
from .fusion import Rule, combine_all

NUCLEOTIDES = "UCAG"
POSITIONS = (1, 2, 3)
ALL_CODONS = tuple("".join(t) for t in itertools.product(NUCLEOTIDES, repeat=3))
CELLS = tuple((p, n) for p in POSITIONS for n in NUCLEOTIDES)

# NCBI translation table 1, codons in UCAG order; '*' marks stop codons
STANDARD_TABLE = "FFLLSSSSYY**CC*WLLLLPPPPHHQQRRRRIIIMTTTTNNKKSSRRVVVVAAAADDEEGGGG"

TOY_CODON = "GCA"


def check_codon(triplet: str) -> str:
    if not isinstance(triplet, str) or len(triplet) != 3 or any(c not in NUCLEOTIDES for c in triplet):
        raise errors.InvalidNucleotide(f"not a codon over {{A,C,G,U}}: {triplet!r}")
    return triplet


@dataclass(frozen=True)
class GeneticCode:
    """Per-cell evidence tables over a frame of codons and amino acids."""

    frame: Frame
    evidence: Mapping[tuple[int, str], BodyOfEvidence]
    name: str = ""

    def __post_init__(self):
        ev = {}
        for key, body in dict(self.evidence).items():
            pos, nt = key
            pos = int(pos)
            if pos not in POSITIONS or nt not in NUCLEOTIDES:
                raise errors.InvalidGeneticCode(f"no such cell: {key!r}")
            if body.frame != self.frame:
                raise errors.FrameMismatch(f"cell {pos}{nt} lives on a different frame")
            if body.regime is not Regime.CLOSED:
                raise errors.InvalidGeneticCode(f"cell {pos}{nt} must be a closed-regime body")
            ev[(pos, nt)] = body
        missing = [f"{p}{n}" for p, n in CELLS if (p, n) not in ev]
        if missing:
            raise errors.InvalidGeneticCode(f"cells without evidence: {', '.join(missing)}")
        for lab in self.frame.ground:
            if len(lab) != 3 or any(c not in NUCLEOTIDES for c in lab):
                raise errors.InvalidGeneticCode(f"ground label {lab!r} is not a codon")
        object.__setattr__(self, "evidence", MappingProxyType({c: ev[c] for c in CELLS}))

    @property
    def amino_acids(self) -> tuple[str, ...]:
        return self.frame.names

    def bodies_for(self, triplet: str) -> tuple[BodyOfEvidence, ...]:
        check_codon(triplet)
        return tuple(self.evidence[(p, n)] for p, n in zip(POSITIONS, triplet))

    def with_cell(self, pos: int, nt: str, body: BodyOfEvidence) -> GeneticCode:
        ev = dict(self.evidence)
        ev[(pos, nt)] = body
        return GeneticCode(self.frame, ev, self.name)


def standard_frame() -> Frame:
    """The 64 codons with the 20 standard amino acids as possibilities (stops excluded)."""
    groups: dict[str, list[str]] = {}
    for codon, aa in zip(ALL_CODONS, STANDARD_TABLE):
        if aa != "*":
            groups.setdefault(aa, []).append(codon)
    return new_frame(ALL_CODONS, dict(sorted(groups.items())))


def toy_frame() -> Frame:
    """Two amino acids sharing the codon GCA: A1 has four codons, A2 two."""
    return new_frame(ALL_CODONS, {"A1": ["GCU", "GCC", "GCA", "GCG"], "A2": ["GCA", "GGA"]})


def toy_code(ambiguous: bool = True) -> GeneticCode:
    """Two-amino-acid code whose codon GCA replays the worked walkthrough.

    The first two nucleotides each support A1 and A2 equally while leaving a
    third of the mass on THETA.  In the unambiguous variant the third
    nucleotide points to A2 alone; in the ambiguous one it carries no
    evidence.  All other cells are vacuous.
    """
    frame = toy_frame()
    third = Fraction(1, 3)
    shared = _build(frame, {frame.possibility("A1"): third, frame.possibility("A2"): third, THETA: third}, Regime.CLOSED)
    blank = _build(frame, {THETA: Fraction(1)}, Regime.CLOSED)
    last = blank if ambiguous else _build(frame, {frame.possibility("A2"): Fraction(1)}, Regime.CLOSED)
    ev = {cell: blank for cell in CELLS}
    ev[(1, "G")] = shared
    ev[(2, "C")] = shared
    ev[(3, "A")] = last
    return GeneticCode(frame, ev, "toy-ambiguous" if ambiguous else "toy-unambiguous")


@dataclass(frozen=True)
class DecodeStep:
    time: int
    position: int
    incoming: BodyOfEvidence
    cumulative: BodyOfEvidence
    evaluations: Mapping[str, EvalResult]


@dataclass(frozen=True)
class DecodingTrace:
    codon: str
    steps: tuple[DecodeStep, ...]
    decision: str | None
    candidates: tuple[str, ...]
    rule: Rule
    mode: EvalMode

    @property
    def final(self) -> BodyOfEvidence:
        return self.steps[-1].cumulative

    @property
    def decided(self) -> bool:
        return self.decision is not None


def _decide(body: BodyOfEvidence) -> tuple[str | None, tuple[str, ...]]:
    """Unique table-mode belief maximizer, else ``None`` and the tied set."""
    beliefs = {aa: interval(body, aa, EvalMode.TABLE).belief for aa in body.frame.names}
    if not beliefs:
        return None, ()
    best = max(beliefs.values())
    tol = 0 if body.exact else INDIFFERENCE_TOL
    tied = tuple(aa for aa, b in beliefs.items() if best - b <= tol)
    if len(tied) == 1 and best > 0:
        return tied[0], tied
    return None, tied


def decode_codon(
    code: GeneticCode,
    triplet: str,
    rule: Rule | str = Rule.SMETS,
    mode: EvalMode | str = EvalMode.TABLE,
    order: Sequence[int] = (0, 1, 2),
) -> DecodingTrace:
    """Combine the codon's three cell bodies in arrival order.

    ``order`` permutes arrival (indices into the codon); the final body does
    not depend on it.  The decision always uses table-mode belief; ``mode``
    only selects what the trace records.
    """
    rule, mode = Rule(rule), EvalMode(mode)
    bodies = code.bodies_for(triplet)
    if sorted(order) != [0, 1, 2]:
        raise ValueError(f"order must be a permutation of (0, 1, 2), got {order!r}")
    steps = []
    arrived = []
    for t, idx in enumerate(order, start=1):
        arrived.append(bodies[idx])
        cum = combine_all(rule, arrived).result
        evals = MappingProxyType({aa: interval(cum, aa, mode) for aa in code.amino_acids})
        steps.append(DecodeStep(t, idx + 1, bodies[idx], cum, evals))
    decision, tied = _decide(steps[-1].cumulative)
    return DecodingTrace(triplet, tuple(steps), decision, tied, rule, mode)


@dataclass(frozen=True)
class StatisticalProtein:
    mrna: str
    distribution: Mapping[tuple[str, ...], Fraction]
    samples: int
    seed: int


def translate(
    code: GeneticCode, mrna: str, samples: int, seed: int, rule: Rule | str = Rule.SMETS
) -> StatisticalProtein:
    """Sample ``samples`` proteins from an mRNA string.

    Decided codons always yield their amino acid.  Undecided codons draw from
    the tied set with weights proportional to table-mode plausibility
    (uniformly when every weight is zero).
    """
    if len(mrna) % 3:
        raise errors.LengthNotMultipleOfThree(f"mRNA length {len(mrna)} is not a multiple of 3")
    if samples < 1:
        raise ValueError("samples must be at least 1")
    codons = [check_codon(mrna[i : i + 3]) for i in range(0, len(mrna), 3)]
    choices = {}
    for c in dict.fromkeys(codons):
        trace = decode_codon(code, c, rule)
        if trace.decided:
            choices[c] = ((trace.decision,), None)
            continue
        names = trace.candidates or code.amino_acids
        weights = [float(interval(trace.final, aa, EvalMode.TABLE).plausibility) for aa in names]
        if not any(weights):
            weights = None
        choices[c] = (names, weights)
    rng = random.Random(seed)
    counts: Counter = Counter()
    for _ in range(samples):
        seq = []
        for c in codons:
            names, weights = choices[c]
            seq.append(names[0] if len(names) == 1 else rng.choices(names, weights)[0])
        counts[tuple(seq)] += 1
    dist = {k: Fraction(v, samples) for k, v in sorted(counts.items())}
    return StatisticalProtein(mrna, MappingProxyType(dist), samples, seed)


def _codon_entropy(code: GeneticCode, codon: str, mode: EvalMode, rule: Rule) -> float:
    return entropy(combine_all(rule, code.bodies_for(codon)).result, mode).total


def code_entropy(code: GeneticCode, mode: EvalMode | str = EvalMode.LITERAL, rule: Rule | str = Rule.SMETS) -> float:
    """Mean entropy of the final decoded body over all 64 codons."""
    mode, rule = EvalMode(mode), Rule(rule)
    return math.fsum(_codon_entropy(code, c, mode, rule) for c in ALL_CODONS) / len(ALL_CODONS)


def code_ambiguity(code: GeneticCode, mode: EvalMode | str = EvalMode.LITERAL, rule: Rule | str = Rule.SMETS):
    """Mean ambiguity term over all 64 codons; exact when the code is rational."""
    mode, rule = EvalMode(mode), Rule(rule)
    terms = [entropy(combine_all(rule, code.bodies_for(c)).result, mode).ambiguity_term for c in ALL_CODONS]
    if all(isinstance(t, Fraction) for t in terms):
        return sum(terms, Fraction(0)) / len(ALL_CODONS)
    return math.fsum(terms) / len(ALL_CODONS)


@dataclass(frozen=True)
class Mutation:
    """Move all of one cell's mass from ``source`` to ``target``.

    Either side may be an amino-acid name or THETA; amino acid to amino acid
    retargets the cell.
    """

    position: int
    nucleotide: str
    source: str | Label
    target: str | Label

    @property
    def kind(self) -> str:
        if self.source is THETA:
            return "commit"
        if self.target is THETA:
            return "withdraw"
        return "retarget"

    def describe(self) -> str:
        name = lambda x: x.value if isinstance(x, Label) else x  # noqa: E731
        return f"{self.position}{self.nucleotide}:{name(self.source)}->{name(self.target)}"

    def apply(self, code: GeneticCode) -> GeneticCode:
        body = code.evidence[(self.position, self.nucleotide)]
        src, dst = body.frame.focal(self.source), body.frame.focal(self.target)
        masses = dict(body.masses)
        moved = masses.pop(src)
        masses[dst] = masses.get(dst, 0) + moved
        return code.with_cell(self.position, self.nucleotide, _build(body.frame, masses, Regime.CLOSED))


def neighbors(code: GeneticCode) -> list[Mutation]:
    """Every single-cell move, in a fixed order."""
    moves = []
    frame = code.frame
    for pos, nt in CELLS:
        body = code.evidence[(pos, nt)]
        for src in (*code.amino_acids, THETA):
            if body.masses.get(frame.focal(src), 0) == 0:
                continue
            for dst in (*code.amino_acids, THETA):
                if dst != src:
                    moves.append(Mutation(pos, nt, src, dst))
    return moves


@dataclass(frozen=True)
class EvolutionStep:
    step: int
    mutation: Mutation
    entropy: float
    accepted: bool


@dataclass(frozen=True)
class EvolutionTrajectory:
    initial_entropy: float
    steps: tuple[EvolutionStep, ...]
    final_code: GeneticCode
    final_entropy: float
    local_minimum: bool
    mode: EvalMode = field(default=EvalMode.LITERAL)

    @property
    def accepted_entropies(self) -> list[float]:
        return [self.initial_entropy] + [s.entropy for s in self.steps if s.accepted]

    @property
    def accepted(self) -> list[EvolutionStep]:
        return [s for s in self.steps if s.accepted]


def evolve_code(
    initial: GeneticCode,
    max_steps: int,
    seed: int,
    mode: EvalMode | str = EvalMode.LITERAL,
    rule: Rule | str = Rule.SMETS,
) -> EvolutionTrajectory:
    """Greedy first-improvement descent of :func:`code_entropy`.

    Each step draws an untried neighbor of the current code at random and
    accepts it iff the mean codon entropy strictly drops.  The search stops
    after ``max_steps`` proposals or once every neighbor of the current code
    has been tried without improvement.
    """
    if max_steps < 1:
        raise ValueError("max_steps must be at least 1")
    mode, rule = EvalMode(mode), Rule(rule)
    rng = random.Random(seed)
    n = len(ALL_CODONS)
    current = initial
    per_codon = {c: _codon_entropy(current, c, mode, rule) for c in ALL_CODONS}
    start = level = math.fsum(per_codon.values()) / n
    untried = neighbors(current)
    steps = []
    while len(steps) < max_steps and untried:
        move = untried.pop(rng.randrange(len(untried)))
        candidate = move.apply(current)
        touched = {c: _codon_entropy(candidate, c, mode, rule) for c in ALL_CODONS if c[move.position - 1] == move.nucleotide}
        value = math.fsum({**per_codon, **touched}.values()) / n
        accepted = value < level
        steps.append(EvolutionStep(len(steps) + 1, move, value, accepted))
        if accepted:
            current, level = candidate, value
            per_codon.update(touched)
            untried = neighbors(current)
    return EvolutionTrajectory(start, tuple(steps), current, level, not untried, mode)
