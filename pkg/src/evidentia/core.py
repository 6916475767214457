"""Frames of discernment, focal elements and bodies of evidence.

A :class:`Frame` is a finite ground universe together with named
possibilities, each a nonempty subset of the ground.  Possibilities may
overlap.  Subsets are stored as integer bitmasks over the ground indices
(bit ``i`` set means ``ground[i]`` is a member).

Focal elements are either a nonzero bitmask or one of the two labels
:data:`THETA` (open-world ignorance, *not* the union of the ground) and
:data:`EMPTY` (conflict, only legal in the open TBM regime).

Masses are either all :class:`fractions.Fraction` (rational mode, exact) or
all ``float`` (float mode, normalization checked to ``FLOAT_TOL``).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Mapping, Union

from . import errors

MAX_GROUND = 4096
FLOAT_TOL = 1e-9


class Label(enum.Enum):
    THETA = "theta"
    EMPTY = "empty"

    def __repr__(self):
        return self.name


THETA = Label.THETA
EMPTY = Label.EMPTY

Focal = Union[int, Label]
Mass = Union[Fraction, float]


class Regime(str, enum.Enum):
    """Normalization regime of a body of evidence."""

    CLOSED = "closed"
    OPEN_TBM = "open_tbm"


def meet(x: Focal, y: Focal) -> Focal:
    """Intersect two focal elements.

    ``X & THETA == X``, ``THETA & THETA == THETA``, anything with ``EMPTY`` is
    ``EMPTY``, and two disjoint subsets meet in ``EMPTY``.
    """
    if x is EMPTY or y is EMPTY:
        return EMPTY
    if x is THETA:
        return y
    if y is THETA:
        return x
    m = x & y
    return m if m else EMPTY


def focal_sort_key(f: Focal):
    # subsets first by mask, then theta, then empty
    if f is THETA:
        return (1, 0)
    if f is EMPTY:
        return (2, 0)
    return (0, f)


def is_subset(inner: int, outer: int) -> bool:
    return inner & ~outer == 0


@dataclass(frozen=True)
class Frame:
    """Ground universe plus named, possibly overlapping, possibilities.

    Build frames with :func:`new_frame`; the constructor trusts its input.
    """

    ground: tuple[str, ...]
    possibilities: tuple[tuple[str, int], ...]
    _index: Mapping[str, int] = field(default=None, repr=False, compare=False, hash=False)
    _named: Mapping[str, int] = field(default=None, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(
            self, "_index", MappingProxyType({lab: i for i, lab in enumerate(self.ground)})
        )
        object.__setattr__(self, "_named", MappingProxyType(dict(self.possibilities)))

    @property
    def full_mask(self) -> int:
        return (1 << len(self.ground)) - 1

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.possibilities)

    def possibility(self, name: str) -> int:
        try:
            return self._named[name]
        except KeyError:
            raise errors.UnknownLabel(f"unknown possibility {name!r}") from None

    def has_possibility(self, name: str) -> bool:
        return name in self._named

    def subset(self, labels: Iterable[str]) -> int:
        """Bitmask of a set of ground labels."""
        mask = 0
        for lab in labels:
            try:
                mask |= 1 << self._index[lab]
            except KeyError:
                raise errors.UnknownLabel(f"label {lab!r} is not in the ground") from None
        return mask

    def meet_of(self, names: Iterable[str]) -> int:
        """Intersection of named possibilities, as a (possibly zero) mask."""
        names = list(names)
        if not names:
            raise errors.InvalidFocal("an intersection needs at least one possibility name")
        mask = self.full_mask
        for name in names:
            mask &= self.possibility(name)
        return mask

    def labels(self, mask: int) -> tuple[str, ...]:
        return tuple(lab for i, lab in enumerate(self.ground) if mask >> i & 1)

    def check_mask(self, mask: int) -> int:
        if isinstance(mask, bool) or not isinstance(mask, int):
            raise errors.InvalidFocal(f"not a focal element: {mask!r}")
        if mask <= 0:
            raise errors.InvalidFocal("empty subset; use the EMPTY label for conflict mass")
        if mask & ~self.full_mask:
            raise errors.UnknownLabel("subset has members outside the ground")
        return mask

    def focal(self, spec) -> Focal:
        """Coerce ``spec`` to a focal element.

        Accepts a :class:`Label`, a bitmask, or a possibility name.
        """
        if isinstance(spec, Label):
            return spec
        if isinstance(spec, str):
            return self.possibility(spec)
        return self.check_mask(spec)

    def describe(self, f: Focal) -> str:
        if isinstance(f, Label):
            return f.value
        for name, mask in self.possibilities:
            if mask == f:
                return name
        holders = [name for name, mask in self.possibilities if is_subset(f, mask)]
        if holders and self.meet_of(holders) == f:
            return "&".join(holders)
        return "{" + ",".join(self.labels(f)) + "}"


def new_frame(ground: Iterable[str], possibilities: Mapping[str, Iterable[str]]) -> Frame:
    """Build a frame from ground labels and named label sets.

    >>> f = new_frame(["c1", "c2", "c3"], {"A1": ["c1", "c2"], "A2": ["c2", "c3"]})
    >>> f.labels(f.possibility("A1") & f.possibility("A2"))
    ('c2',)
    """
    ground = tuple(ground)
    if not ground:
        raise errors.EmptyPossibility("ground must contain at least one label")
    if len(ground) > MAX_GROUND:
        raise errors.FrameTooLarge(f"ground has {len(ground)} labels; the cap is {MAX_GROUND}")
    seen = set()
    for lab in ground:
        if not isinstance(lab, str) or not lab:
            raise errors.UnknownLabel(f"ground labels must be nonempty strings, got {lab!r}")
        if lab in seen:
            raise errors.DuplicateLabel(f"duplicate ground label {lab!r}")
        seen.add(lab)
    frame = Frame(ground, ())
    named = []
    for name, labels in possibilities.items():
        labels = list(labels)
        if not labels:
            raise errors.EmptyPossibility(f"possibility {name!r} is empty")
        named.append((name, frame.subset(labels)))
    return Frame(ground, tuple(named))


def _coerce(values: list) -> list:
    """Bring masses to one numeric mode: float if any float, else Fraction."""
    for v in values:
        if isinstance(v, bool) or not isinstance(v, (int, float, Fraction)):
            raise errors.NormalizationViolation(f"mass must be a number, got {v!r}")
    if any(isinstance(v, float) for v in values):
        out = [float(v) for v in values]
        if not all(math.isfinite(v) for v in out):
            raise errors.NormalizationViolation("masses must be finite")
        return out
    return [Fraction(v) for v in values]


def is_exact(values: Iterable[Mass]) -> bool:
    return all(isinstance(v, Fraction) for v in values)


def _sums_to_one(total, exact: bool) -> bool:
    return total == 1 if exact else abs(total - 1.0) <= FLOAT_TOL


def _total(values, exact: bool):
    values = list(values)
    return sum(values, Fraction(0)) if exact else math.fsum(values)


@dataclass(frozen=True)
class BodyOfEvidence:
    """Nonnegative masses on focal elements under one normalization regime.

    Zero masses are not stored; :meth:`mass` returns zero for absent focals.
    Use :func:`make_boe` to build validated instances.
    """

    frame: Frame
    masses: Mapping[Focal, Mass]
    regime: Regime = Regime.CLOSED

    def mass(self, focal) -> Mass:
        f = self.frame.focal(focal)
        return self.masses.get(f, Fraction(0) if self.exact else 0.0)

    @property
    def exact(self) -> bool:
        return is_exact(self.masses.values())

    def total(self) -> Mass:
        return _total(self.masses.values(), self.exact)

    def named(self) -> dict[str, Mass]:
        """Masses keyed by human-readable focal names (for display and tests)."""
        return {self.frame.describe(f): m for f, m in self.masses.items()}

    def __repr__(self):
        inner = ", ".join(f"{k}: {v}" for k, v in self.named().items())
        return f"BodyOfEvidence({self.regime.value}, {{{inner}}})"


def _build(frame: Frame, masses: Mapping[Focal, Mass], regime: Regime) -> BodyOfEvidence:
    """Validate and freeze an already-coerced mass map."""
    regime = Regime(regime)
    exact = is_exact(masses.values())
    for f, m in masses.items():
        if m < 0:
            raise errors.NegativeMass(f"negative mass {m} on {frame.describe(f)}")
    if regime is Regime.CLOSED and masses.get(EMPTY, 0) != 0:
        raise errors.EmptyMassInClosedRegime("the closed regime admits no mass on EMPTY")
    total = _total(masses.values(), exact)
    if not _sums_to_one(total, exact):
        raise errors.NormalizationViolation(f"masses sum to {total}, not 1")
    kept = {f: masses[f] for f in sorted(masses, key=focal_sort_key) if masses[f] != 0}
    return BodyOfEvidence(frame, MappingProxyType(kept), regime)


def make_boe(frame: Frame, assignments, regime: Regime | str = Regime.CLOSED) -> BodyOfEvidence:
    """Validated body of evidence from ``(focal, mass)`` pairs.

    ``assignments`` may also be a mapping.  Focals are labels, bitmasks or
    possibility names; duplicates are merged by summing.  Floats anywhere
    switch the whole body to float mode.
    """
    if isinstance(assignments, Mapping):
        assignments = assignments.items()
    pairs = [(frame.focal(f), m) for f, m in assignments]
    values = _coerce([m for _, m in pairs])
    merged: dict[Focal, Mass] = {}
    for (f, _), m in zip(pairs, values):
        if m < 0:
            raise errors.NegativeMass(f"negative mass {m} on {frame.describe(f)}")
        merged[f] = merged.get(f, 0) + m
    return _build(frame, merged, Regime(regime))


def vacuous(frame: Frame) -> BodyOfEvidence:
    """Total ignorance: all mass on THETA."""
    return BodyOfEvidence(frame, MappingProxyType({THETA: Fraction(1)}), Regime.CLOSED)


def renormalize(boe: BodyOfEvidence, target: Regime | str) -> BodyOfEvidence:
    """Rescale ``boe`` to sum to one under ``target``.

    Moving to the closed regime drops the EMPTY mass first.
    """
    target = Regime(target)
    masses = dict(boe.masses)
    if target is Regime.CLOSED:
        masses.pop(EMPTY, None)
    exact = boe.exact
    total = _total(masses.values(), exact)
    if not masses or total == 0:
        raise errors.TotalConflict("no mass left outside EMPTY")
    return _build(boe.frame, {f: m / total for f, m in masses.items()}, target)


def _image_mask(mask: int, images: list[int]) -> int:
    out = 0
    i = 0
    while mask:
        if mask & 1:
            out |= images[i]
        mask >>= 1
        i += 1
    return out


def coarsen(frame: Frame, merge_map: Mapping[str, str], boe: BodyOfEvidence | None = None):
    """Merge ground labels according to ``merge_map`` (fine label -> coarse label).

    Coarse labels are ordered by first appearance along the fine ground.
    Focal elements map to their images; masses of focals with equal images
    are summed.  Returns ``(coarse_frame, coarse_body)``; the body is ``None``
    when none was given.
    """
    missing = [lab for lab in frame.ground if lab not in merge_map]
    if missing:
        raise errors.PartialMergeMap(f"merge map does not cover {missing}")
    extra = [lab for lab in merge_map if lab not in frame._index]
    if extra:
        raise errors.PartialMergeMap(f"merge map has labels outside the ground: {extra}")
    coarse_ground = list(dict.fromkeys(merge_map[lab] for lab in frame.ground))
    pos = {lab: i for i, lab in enumerate(coarse_ground)}
    images = [1 << pos[merge_map[lab]] for lab in frame.ground]
    coarse = Frame(
        tuple(coarse_ground),
        tuple((name, _image_mask(mask, images)) for name, mask in frame.possibilities),
    )
    if boe is None:
        return coarse, None
    _check_frame(frame, boe)
    masses: dict[Focal, Mass] = {}
    for f, m in boe.masses.items():
        g = f if isinstance(f, Label) else _image_mask(f, images)
        masses[g] = masses.get(g, 0) + m
    return coarse, _build(coarse, masses, boe.regime)


def refine(frame: Frame, refinement_map: Mapping[str, Iterable[str]], boe: BodyOfEvidence | None = None):
    """Split each ground label into a nonempty set of fine labels.

    Fine label sets must be pairwise disjoint.  Each subset focal becomes the
    union of its members' images; masses and the THETA/EMPTY labels are
    untouched.  Unordered label sets are sorted to fix the fine ground order.
    """
    missing = [lab for lab in frame.ground if lab not in refinement_map]
    if missing:
        raise errors.PartialMergeMap(f"refinement map does not cover {missing}")
    fine_ground: list[str] = []
    owner: dict[str, str] = {}
    spans = []
    for lab in frame.ground:
        fine = refinement_map[lab]
        fine = sorted(fine) if isinstance(fine, (set, frozenset)) else list(fine)
        if not fine:
            raise errors.EmptyImage(f"label {lab!r} refines to nothing")
        start = len(fine_ground)
        for f in fine:
            if f in owner:
                raise errors.OverlappingImages(f"fine label {f!r} is claimed by {owner[f]!r} and {lab!r}")
            owner[f] = lab
            fine_ground.append(f)
        spans.append(((1 << len(fine_ground)) - 1) ^ ((1 << start) - 1))
    fine = Frame(
        tuple(fine_ground),
        tuple((name, _image_mask(mask, spans)) for name, mask in frame.possibilities),
    )
    if boe is None:
        return fine, None
    _check_frame(frame, boe)
    masses = {
        (f if isinstance(f, Label) else _image_mask(f, spans)): m for f, m in boe.masses.items()
    }
    return fine, _build(fine, masses, boe.regime)


def _check_frame(frame: Frame, boe: BodyOfEvidence):
    if boe.frame != frame:
        raise errors.FrameMismatch("body of evidence lives on a different frame")
