"""Exception hierarchy.

Every error raised by the library derives from :class:`EvidenceError`.
:class:`ValidationError` covers malformed inputs; :class:`ComputationError`
covers well-formed inputs that cannot be evaluated (total conflict).
"""


class EvidenceError(ValueError):
    """Base class for all library errors."""


class ValidationError(EvidenceError):
    pass


class ComputationError(EvidenceError):
    pass


# frames
class DuplicateLabel(ValidationError):
    pass


class EmptyPossibility(ValidationError):
    pass


class UnknownLabel(ValidationError):
    pass


class FrameTooLarge(ValidationError):
    pass


# bodies of evidence
class NegativeMass(ValidationError):
    pass


class NormalizationViolation(ValidationError):
    pass


class EmptyMassInClosedRegime(ValidationError):
    pass


class InvalidFocal(ValidationError):
    pass


class TotalConflict(ComputationError):
    pass


# refine / coarsen
class PartialMergeMap(ValidationError):
    pass


class OverlappingImages(ValidationError):
    pass


class EmptyImage(ValidationError):
    pass


# fusion
class FrameMismatch(ValidationError):
    pass


class RegimeMismatch(ValidationError):
    pass


class EmptyList(ValidationError):
    pass


class AlphaOutOfRange(ValidationError):
    pass


# evaluation / entropy
class HypothesisOutsideFrame(ValidationError):
    pass


class TableModeOnUnnamedHypothesis(ValidationError):
    pass


class NoNamedPossibilities(ValidationError):
    pass


class NotAProbabilityVector(ValidationError):
    pass


# codon simulation
class InvalidNucleotide(ValidationError):
    pass


class LengthNotMultipleOfThree(ValidationError):
    pass


class InvalidGeneticCode(ValidationError):
    pass


# serialization
class SchemaError(ValidationError):
    """Malformed JSON document; ``path`` locates the offending node."""

    def __init__(self, path, message):
        super().__init__(f"{path}: {message}")
        self.path = path
